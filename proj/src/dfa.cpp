#include "scops/dfa.hpp"

#include <algorithm>
#include <string>

#include "scops/error.hpp"

namespace scops {

Dfa::Dfa(Alphabet alphabet, std::size_t state_count, std::vector<State> table, State initial,
         const std::vector<State>& finals)
    : alphabet_(std::move(alphabet)),
      state_count_(state_count),
      table_(std::move(table)),
      initial_(initial),
      final_mask_(state_count, 0) {
  if (alphabet_.empty()) throw InputError("dfa alphabet is empty");
  if (state_count_ == 0) throw InputError("dfa needs at least one state");
  if (table_.size() != state_count_ * alphabet_.size()) {
    throw InputError("dfa transition table is not total: expected " +
                     std::to_string(state_count_ * alphabet_.size()) + " entries, got " +
                     std::to_string(table_.size()));
  }
  for (State target : table_) {
    if (target >= state_count_) throw InputError("dfa transition target out of range");
  }
  if (initial_ >= state_count_) throw InputError("dfa initial state out of range");
  for (State f : finals) {
    if (f >= state_count_) throw InputError("dfa final state out of range");
    final_mask_[f] = 1;
  }
}

Dfa Dfa::from_rows(Alphabet alphabet, const std::vector<std::vector<State>>& rows, State initial,
                   const std::vector<State>& finals) {
  if (rows.size() != alphabet.size()) throw InputError("one transition row per symbol required");
  if (rows.empty()) throw InputError("dfa alphabet is empty");
  const std::size_t n = rows.front().size();
  std::vector<State> table(n * rows.size());
  for (std::size_t a = 0; a < rows.size(); ++a) {
    if (rows[a].size() != n) {
      throw InputError(std::string("transition row for '") + alphabet.display(a) +
                       "' has the wrong length");
    }
    for (std::size_t q = 0; q < n; ++q) table[q * rows.size() + a] = rows[a][q];
  }
  return Dfa(std::move(alphabet), n, std::move(table), initial, finals);
}

std::vector<State> Dfa::finals() const {
  std::vector<State> out;
  for (State q = 0; q < state_count_; ++q) {
    if (final_mask_[q]) out.push_back(q);
  }
  return out;
}

std::size_t Dfa::final_count() const noexcept {
  return static_cast<std::size_t>(std::count(final_mask_.begin(), final_mask_.end(), 1));
}

State Dfa::run(State from, const Word& word) const {
  State q = from;
  for (Symbol a : word) {
    if (a >= symbol_count()) throw InputError("symbol index out of range");
    q = next(q, a);
  }
  return q;
}

Dfa sigma_star_dfa(const Alphabet& alphabet) {
  return Dfa(alphabet, 1, std::vector<State>(alphabet.size(), 0), 0, {0});
}

Dfa empty_dfa(const Alphabet& alphabet) {
  return Dfa(alphabet, 1, std::vector<State>(alphabet.size(), 0), 0, {});
}

}  // namespace scops
