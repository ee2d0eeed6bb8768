#include "scops/determinize.hpp"

#include <deque>
#include <unordered_map>

#include "detail/bits.hpp"

namespace scops {

namespace {

template <class Set>
Dfa run_subset_construction(const Nfa& n, SubsetMap* provenance) {
  using detail::for_each_bit;
  using detail::or_into;
  using detail::set_bit;

  const std::size_t states = n.state_count();
  const std::size_t k = n.symbol_count();
  const auto empty = detail::make_set(static_cast<Set*>(nullptr), states);

  // closure[q]: epsilon closure of {q}.
  std::vector<Set> closure(states, empty);
  for (State q = 0; q < states; ++q) {
    std::vector<State> stack{q};
    set_bit(closure[q], q);
    while (!stack.empty()) {
      const State p = stack.back();
      stack.pop_back();
      for (State t : n.epsilon_successors(p)) {
        if (!detail::test_bit(closure[q], t)) {
          set_bit(closure[q], t);
          stack.push_back(t);
        }
      }
    }
  }
  // post[q*k+a]: epsilon closure of delta(q, a).
  std::vector<Set> post(states * k, empty);
  for (State q = 0; q < states; ++q) {
    for (Symbol a = 0; a < k; ++a) {
      for (State t : n.successors(q, a)) or_into(post[q * k + a], closure[t]);
    }
  }
  Set final_set = empty;
  for (State f : n.finals()) set_bit(final_set, f);

  Set start = empty;
  for (State q : n.initials()) or_into(start, closure[q]);

  std::unordered_map<Set, State, detail::SetHash<Set>> index;
  std::vector<Set> discovered;
  std::vector<State> table;
  std::vector<State> finals;

  index.emplace(start, 0);
  discovered.push_back(start);
  for (State cur = 0; cur < discovered.size(); ++cur) {
    const Set source = discovered[cur];
    if (detail::intersects(source, final_set)) finals.push_back(cur);
    for (Symbol a = 0; a < k; ++a) {
      Set target = empty;
      for_each_bit(source, [&](State q) { or_into(target, post[q * k + a]); });
      auto [it, inserted] = index.try_emplace(target, static_cast<State>(discovered.size()));
      if (inserted) discovered.push_back(std::move(target));
      table.push_back(it->second);
    }
  }

  if (provenance != nullptr) {
    std::vector<std::vector<State>> lists;
    lists.reserve(discovered.size());
    for (const auto& s : discovered) lists.push_back(detail::to_list(s));
    *provenance = SubsetMap(std::move(lists));
  }
  const std::size_t count = discovered.size();
  return Dfa(n.alphabet(), count, std::move(table), 0, finals);
}

Dfa dispatch(const Nfa& n, SubsetMap* provenance) {
  if (n.state_count() <= 64) return run_subset_construction<std::uint64_t>(n, provenance);
  return run_subset_construction<detail::Bits>(n, provenance);
}

}  // namespace

Determinized determinize(const Nfa& n) {
  SubsetMap map;
  Dfa dfa = dispatch(n, &map);
  return {std::move(dfa), std::move(map)};
}

Dfa subset_construction(const Nfa& n) { return dispatch(n, nullptr); }

}  // namespace scops
