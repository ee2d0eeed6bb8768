#include "scops/nfa.hpp"

#include <algorithm>

#include "scops/error.hpp"

namespace scops {

namespace {

void insert_sorted(std::vector<State>& v, State x) {
  auto it = std::lower_bound(v.begin(), v.end(), x);
  if (it == v.end() || *it != x) v.insert(it, x);
}

}  // namespace

Nfa::Nfa(Alphabet alphabet, std::size_t state_count)
    : alphabet_(std::move(alphabet)),
      state_count_(state_count),
      delta_(state_count * alphabet_.size()),
      epsilon_(state_count) {
  if (alphabet_.empty()) throw InputError("nfa alphabet is empty");
}

Nfa Nfa::from_dfa(const Dfa& dfa) {
  Nfa n(dfa.alphabet(), dfa.state_count());
  for (State q = 0; q < dfa.state_count(); ++q) {
    for (Symbol a = 0; a < dfa.symbol_count(); ++a) n.add_transition(q, a, dfa.next(q, a));
  }
  n.add_initial(dfa.initial());
  for (State f : dfa.finals()) n.add_final(f);
  return n;
}

void Nfa::check_state(State q) const {
  if (q >= state_count_) throw InputError("nfa state id out of range");
}

void Nfa::add_transition(State from, Symbol a, State to) {
  check_state(from);
  check_state(to);
  if (a >= symbol_count()) throw InputError("nfa symbol index out of range");
  insert_sorted(delta_[from * symbol_count() + a], to);
}

void Nfa::add_epsilon(State from, State to) {
  check_state(from);
  check_state(to);
  insert_sorted(epsilon_[from], to);
}

void Nfa::add_initial(State q) {
  check_state(q);
  insert_sorted(initials_, q);
}

void Nfa::add_final(State q) {
  check_state(q);
  insert_sorted(finals_, q);
}

bool Nfa::is_final(State q) const { return std::binary_search(finals_.begin(), finals_.end(), q); }

std::vector<std::pair<State, State>> Nfa::epsilon_edges() const {
  std::vector<std::pair<State, State>> edges;
  for (State q = 0; q < state_count_; ++q) {
    for (State t : epsilon_[q]) edges.emplace_back(q, t);
  }
  return edges;
}

bool Nfa::has_epsilon() const noexcept {
  return std::any_of(epsilon_.begin(), epsilon_.end(), [](const auto& v) { return !v.empty(); });
}

Nfa reverse_nfa(const Dfa& d) {
  Nfa r(d.alphabet(), d.state_count());
  for (State p = 0; p < d.state_count(); ++p) {
    for (Symbol a = 0; a < d.symbol_count(); ++a) r.add_transition(d.next(p, a), a, p);
  }
  for (State f : d.finals()) r.add_initial(f);
  r.add_final(d.initial());
  return r;
}

namespace {

void close_over_epsilon(const Nfa& n, std::vector<char>& in_set) {
  std::vector<State> stack;
  for (State q = 0; q < n.state_count(); ++q) {
    if (in_set[q]) stack.push_back(q);
  }
  while (!stack.empty()) {
    const State q = stack.back();
    stack.pop_back();
    for (State t : n.epsilon_successors(q)) {
      if (!in_set[t]) {
        in_set[t] = 1;
        stack.push_back(t);
      }
    }
  }
}

}  // namespace

bool accepts(const Nfa& n, const Word& word) {
  std::vector<char> current(n.state_count(), 0);
  for (State q : n.initials()) current[q] = 1;
  close_over_epsilon(n, current);
  for (Symbol a : word) {
    if (a >= n.symbol_count()) throw InputError("symbol index out of range");
    std::vector<char> next(n.state_count(), 0);
    for (State q = 0; q < n.state_count(); ++q) {
      if (!current[q]) continue;
      for (State t : n.successors(q, a)) next[t] = 1;
    }
    close_over_epsilon(n, next);
    current = std::move(next);
  }
  for (State f : n.finals()) {
    if (current[f]) return true;
  }
  return false;
}

bool accepts(const Nfa& n, std::string_view word) {
  return accepts(n, n.alphabet().parse_word(word));
}

}  // namespace scops
