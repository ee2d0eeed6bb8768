#pragma once

#include <vector>

#include "scops/dfa.hpp"
#include "scops/nfa.hpp"

namespace scops {

/// Provenance of a determinized automaton: `subsets()[q]` is the sorted
/// list of NFA states that output state `q` stands for. Position 0 is the
/// epsilon closure of the initial set.
class SubsetMap {
 public:
  SubsetMap() = default;
  explicit SubsetMap(std::vector<std::vector<State>> subsets) : subsets_(std::move(subsets)) {}

  const std::vector<std::vector<State>>& subsets() const noexcept { return subsets_; }
  const std::vector<State>& operator[](State q) const { return subsets_[q]; }
  std::size_t size() const noexcept { return subsets_.size(); }

 private:
  std::vector<std::vector<State>> subsets_;
};

struct Determinized {
  Dfa dfa;
  SubsetMap subsets;
};

/// Subset construction. Output states are the reachable epsilon-closed
/// subsets in breadth-first discovery order, successors explored in
/// alphabet order. The empty subset, when reached, is kept as an ordinary
/// non-final (dead) state, so the result is always complete.
Determinized determinize(const Nfa& n);

/// Same automaton as `determinize(n).dfa` without recording provenance.
Dfa subset_construction(const Nfa& n);

}  // namespace scops
