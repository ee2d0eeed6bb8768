#include "scops/constructions.hpp"

#include <string>
#include <unordered_map>

#include "detail/bits.hpp"
#include "scops/determinize.hpp"
#include "scops/error.hpp"
#include "scops/minimize.hpp"

namespace scops {

std::string_view to_string(Operation op) {
  return op == Operation::revcat ? "revcat" : "starcat";
}

std::string_view to_string(Method method) {
  return method == Method::direct ? "direct" : "oracle";
}

Operation parse_operation(std::string_view text) {
  if (text == "revcat") return Operation::revcat;
  if (text == "starcat") return Operation::starcat;
  throw InputError("unknown operation '" + std::string(text) + "'");
}

Method parse_method(std::string_view text) {
  if (text == "direct") return Method::direct;
  if (text == "oracle") return Method::oracle;
  throw InputError("unknown method '" + std::string(text) + "'");
}

std::string_view to_string(Route route) {
  switch (route) {
    case Route::revcat_general: return "revcat-general";
    case Route::revcat_n1: return "revcat-n1";
    case Route::starcat_trivial: return "starcat-trivial";
    case Route::starcat_empty: return "starcat-empty";
    case Route::starcat_special: return "starcat-special";
    case Route::starcat_general: return "starcat-general";
  }
  return "?";
}

namespace {

void require_same_alphabet(const Alphabet& x, const Alphabet& y) {
  if (!(x == y)) {
    throw InputError("operands have different alphabets: {" + x.letters() + "} vs {" +
                     y.letters() + "}");
  }
}

// Breadth-first construction over pair states <left, right>. `Key` holds
// both components; `step` maps (key, symbol) to the successor key and
// `is_final` decides acceptance. States are numbered in discovery order.
template <class Key, class Hash, class Step, class Final, class Describe>
Dfa explore_pairs(const Alphabet& alphabet, Key start, Step&& step, Final&& is_final,
                  PairProvenance* provenance, Describe&& describe) {
  const std::size_t k = alphabet.size();
  std::unordered_map<Key, State, Hash> index;
  std::vector<Key> states{start};
  index.emplace(std::move(start), 0);
  std::vector<State> table;
  std::vector<State> finals;
  for (State cur = 0; cur < states.size(); ++cur) {
    if (is_final(states[cur])) finals.push_back(cur);
    for (Symbol a = 0; a < k; ++a) {
      Key target = step(states[cur], a);
      auto [it, inserted] = index.try_emplace(target, static_cast<State>(states.size()));
      if (inserted) states.push_back(std::move(target));
      table.push_back(it->second);
    }
  }
  if (provenance != nullptr) {
    provenance->left.clear();
    provenance->right.clear();
    for (const Key& key : states) {
      auto [left, right] = describe(key);
      provenance->left.push_back(std::move(left));
      provenance->right.push_back(std::move(right));
    }
  }
  const std::size_t count = states.size();
  return Dfa(alphabet, count, std::move(table), 0, finals);
}

using Described = std::pair<std::vector<State>, std::vector<State>>;

template <class Set>
struct PairKey {
  Set left;
  Set right;
  bool operator==(const PairKey&) const = default;
};

template <class Set>
struct PairKeyHash {
  std::size_t operator()(const PairKey<Set>& key) const noexcept {
    detail::SetHash<Set> h;
    return h(key.left) * 0x9e3779b97f4a7c15ULL ^ h(key.right);
  }
};

// Image of a subset of `d`'s states under symbol `a`.
template <class Set>
Set image(const Dfa& d, const Set& s, Symbol a) {
  Set out = detail::make_set(static_cast<Set*>(nullptr), d.state_count());
  detail::for_each_bit(s, [&](State q) { detail::set_bit(out, d.next(q, a)); });
  return out;
}

template <class Set>
Set singleton(std::size_t universe, State q) {
  Set out = detail::make_set(static_cast<Set*>(nullptr), universe);
  detail::set_bit(out, q);
  return out;
}

template <class Set>
Set final_set(const Dfa& d) {
  Set out = detail::make_set(static_cast<Set*>(nullptr), d.state_count());
  for (State f : d.finals()) detail::set_bit(out, f);
  return out;
}

template <class Set>
Dfa revcat_pairs(const Determinized& reversed_det, const Dfa& n, PairProvenance* provenance) {
  const Dfa& reversed = reversed_det.dfa;
  // `reversed` is determinize(reverse_nfa(m)); its finals are exactly the
  // subsets holding m's initial state.
  using Key = std::pair<State, Set>;
  struct Hash {
    std::size_t operator()(const Key& key) const noexcept {
      return detail::SetHash<Set>{}(key.second) * 31 + key.first;
    }
  };
  const Set f_n = final_set<Set>(n);
  const State s_a = reversed.initial();
  Set start_right = detail::make_set(static_cast<Set*>(nullptr), n.state_count());
  if (reversed.is_final(s_a)) detail::set_bit(start_right, n.initial());
  return explore_pairs<Key, Hash>(
      n.alphabet(), Key{s_a, start_right},
      [&](const Key& key, Symbol a) {
        const State i = reversed.next(key.first, a);
        Set j = image(n, key.second, a);
        if (reversed.is_final(i)) detail::set_bit(j, n.initial());
        return Key{i, std::move(j)};
      },
      [&](const Key& key) { return detail::intersects(key.second, f_n); }, provenance,
      [&](const Key& key) {
        return Described{reversed_det.subsets[key.first], detail::to_list(key.second)};
      });
}

template <class Set>
Dfa starcat_special_pairs(const Dfa& a, const Dfa& b, PairProvenance* provenance) {
  using Key = std::pair<State, Set>;
  struct Hash {
    std::size_t operator()(const Key& key) const noexcept {
      return detail::SetHash<Set>{}(key.second) * 31 + key.first;
    }
  };
  const Set f_b = final_set<Set>(b);
  return explore_pairs<Key, Hash>(
      a.alphabet(), Key{a.initial(), singleton<Set>(b.state_count(), b.initial())},
      [&](const Key& key, Symbol x) {
        const State q = a.next(key.first, x);
        Set t = image(b, key.second, x);
        if (q == a.initial()) detail::set_bit(t, b.initial());
        return Key{q, std::move(t)};
      },
      [&](const Key& key) { return detail::intersects(key.second, f_b); }, provenance,
      [&](const Key& key) {
        return Described{std::vector<State>{key.first}, detail::to_list(key.second)};
      });
}

template <class Set>
Dfa starcat_general_pairs(const Dfa& a, const Dfa& b, PairProvenance* provenance) {
  using Key = PairKey<Set>;
  const Set f_a = final_set<Set>(a);
  const Set f_b = final_set<Set>(b);
  return explore_pairs<Key, PairKeyHash<Set>>(
      a.alphabet(),
      Key{singleton<Set>(a.state_count(), a.initial()),
          singleton<Set>(b.state_count(), b.initial())},
      [&](const Key& key, Symbol x) {
        Set p = image(a, key.left, x);
        Set t = image(b, key.right, x);
        if (detail::intersects(p, f_a)) {
          detail::set_bit(p, a.initial());
          detail::set_bit(t, b.initial());
        }
        return Key{std::move(p), std::move(t)};
      },
      [&](const Key& key) { return detail::intersects(key.right, f_b); }, provenance,
      [&](const Key& key) {
        return Described{detail::to_list(key.left), detail::to_list(key.right)};
      });
}

}  // namespace

Nfa catenation_nfa(const Nfa& a, const Dfa& b) {
  require_same_alphabet(a.alphabet(), b.alphabet());
  const auto offset = static_cast<State>(a.state_count());
  Nfa c(a.alphabet(), a.state_count() + b.state_count());
  for (State q = 0; q < a.state_count(); ++q) {
    for (Symbol x = 0; x < a.symbol_count(); ++x) {
      for (State t : a.successors(q, x)) c.add_transition(q, x, t);
    }
    for (State t : a.epsilon_successors(q)) c.add_epsilon(q, t);
  }
  for (State q = 0; q < b.state_count(); ++q) {
    for (Symbol x = 0; x < b.symbol_count(); ++x) {
      c.add_transition(offset + q, x, offset + b.next(q, x));
    }
  }
  for (State q : a.initials()) c.add_initial(q);
  for (State f : a.finals()) c.add_epsilon(f, offset + b.initial());
  for (State f : b.finals()) c.add_final(offset + f);
  return c;
}

Nfa star_nfa(const Dfa& a) {
  const auto fresh = static_cast<State>(a.state_count());
  Nfa s(a.alphabet(), a.state_count() + 1);
  auto add_with_reentry = [&](State from, State source, Symbol x) {
    const State to = a.next(source, x);
    s.add_transition(from, x, to);
    if (a.is_final(to)) s.add_transition(from, x, a.initial());
  };
  for (State q = 0; q < a.state_count(); ++q) {
    for (Symbol x = 0; x < a.symbol_count(); ++x) add_with_reentry(q, q, x);
  }
  for (Symbol x = 0; x < a.symbol_count(); ++x) add_with_reentry(fresh, a.initial(), x);
  s.add_initial(fresh);
  s.add_final(fresh);
  for (State f : a.finals()) s.add_final(f);
  return s;
}

Dfa revcat_direct(const Dfa& m, const Dfa& n, PairProvenance* provenance) {
  require_same_alphabet(m.alphabet(), n.alphabet());
  const Determinized reversed = determinize(reverse_nfa(m));
  if (n.state_count() <= 64) return revcat_pairs<std::uint64_t>(reversed, n, provenance);
  return revcat_pairs<detail::Bits>(reversed, n, provenance);
}

Dfa revcat_n1_direct(const Dfa& m, bool n_accepting) {
  if (m.state_count() < 2) throw ShapeError("revcat_n1_direct needs at least two states");
  if (!n_accepting) return empty_dfa(m.alphabet());

  const Dfa reversed = subset_construction(reverse_nfa(m));
  const std::size_t k = m.symbol_count();
  // Sentinel id for the merged final sink.
  const auto sink = static_cast<State>(reversed.state_count());
  std::vector<State> id(reversed.state_count() + 1, static_cast<State>(-1));
  auto lift = [&](State q) { return reversed.is_final(q) ? sink : q; };

  std::vector<State> order{lift(reversed.initial())};
  id[order.front()] = 0;
  std::vector<State> table;
  std::vector<State> finals;
  for (std::size_t i = 0; i < order.size(); ++i) {
    const State q = order[i];
    if (q == sink) finals.push_back(static_cast<State>(i));
    for (Symbol a = 0; a < k; ++a) {
      const State t = q == sink ? sink : lift(reversed.next(q, a));
      if (id[t] == static_cast<State>(-1)) {
        id[t] = static_cast<State>(order.size());
        order.push_back(t);
      }
      table.push_back(id[t]);
    }
  }
  const std::size_t count = order.size();
  return Dfa(m.alphabet(), count, std::move(table), 0, finals);
}

Dfa starcat_special_direct(const Dfa& a, const Dfa& b, PairProvenance* provenance) {
  require_same_alphabet(a.alphabet(), b.alphabet());
  const auto finals = a.finals();
  if (finals.size() != 1 || finals.front() != a.initial()) {
    throw ShapeError("special star-catenation needs the initial state as the only final state");
  }
  if (b.state_count() < 2) throw ShapeError("special star-catenation needs |b| >= 2");
  if (b.state_count() <= 64) return starcat_special_pairs<std::uint64_t>(a, b, provenance);
  return starcat_special_pairs<detail::Bits>(a, b, provenance);
}

Dfa starcat_general_direct(const Dfa& a, const Dfa& b, PairProvenance* provenance) {
  require_same_alphabet(a.alphabet(), b.alphabet());
  if (extra_final_count(a) == 0) {
    throw ShapeError("general star-catenation needs a final state other than the initial state");
  }
  if (b.state_count() < 2) throw ShapeError("general star-catenation needs |b| >= 2");
  if (a.state_count() <= 64 && b.state_count() <= 64) {
    return starcat_general_pairs<std::uint64_t>(a, b, provenance);
  }
  return starcat_general_pairs<detail::Bits>(a, b, provenance);
}

std::size_t extra_final_count(const Dfa& a) {
  std::size_t k = 0;
  for (State f : a.finals()) k += f != a.initial() ? 1 : 0;
  return k;
}

Route choose_route(Operation op, const Dfa& a, const Dfa& b) {
  require_same_alphabet(a.alphabet(), b.alphabet());
  if (op == Operation::revcat) {
    return b.state_count() == 1 && a.state_count() >= 2 ? Route::revcat_n1
                                                        : Route::revcat_general;
  }
  if (b.state_count() == 1) return Route::starcat_trivial;
  if (a.final_count() == 0) return Route::starcat_empty;
  if (extra_final_count(a) == 0) return Route::starcat_special;
  return Route::starcat_general;
}

Dfa combined(Operation op, const Dfa& a, const Dfa& b, bool minimize_result) {
  Dfa result = [&] {
    switch (choose_route(op, a, b)) {
      case Route::revcat_general: return revcat_direct(a, b);
      case Route::revcat_n1: return revcat_n1_direct(a, b.is_final(b.initial()));
      case Route::starcat_trivial:
        return b.is_final(b.initial()) ? sigma_star_dfa(b.alphabet()) : empty_dfa(b.alphabet());
      case Route::starcat_empty: return canonical_form(b);
      case Route::starcat_special: return starcat_special_direct(a, b);
      case Route::starcat_general: return starcat_general_direct(a, b);
    }
    throw InputError("unreachable route");
  }();
  return minimize_result ? minimize_hopcroft(result) : result;
}

Dfa oracle_pipeline(Operation op, const Dfa& a, const Dfa& b) {
  require_same_alphabet(a.alphabet(), b.alphabet());
  const Nfa left = op == Operation::revcat ? reverse_nfa(a) : star_nfa(a);
  return subset_construction(catenation_nfa(left, b));
}

}  // namespace scops
