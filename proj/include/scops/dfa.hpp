#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "scops/alphabet.hpp"

namespace scops {

/// Complete deterministic finite automaton over dense state ids
/// `0..state_count()-1`. The transition table is stored row-major:
/// `table[q * alphabet.size() + a]`. The constructor rejects any table that
/// is not total, so every Dfa value in the program is complete.
class Dfa {
 public:
  Dfa(Alphabet alphabet, std::size_t state_count, std::vector<State> table, State initial,
      const std::vector<State>& finals);

  /// Builds from one row per symbol: `rows[a][q]` is the successor of `q` on `a`.
  static Dfa from_rows(Alphabet alphabet, const std::vector<std::vector<State>>& rows,
                       State initial, const std::vector<State>& finals);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  std::size_t state_count() const noexcept { return state_count_; }
  std::size_t symbol_count() const noexcept { return alphabet_.size(); }
  State initial() const noexcept { return initial_; }

  State next(State q, Symbol a) const { return table_[q * symbol_count() + a]; }
  std::span<const State> row(State q) const {
    return {table_.data() + q * symbol_count(), symbol_count()};
  }
  const std::vector<State>& table() const noexcept { return table_; }

  bool is_final(State q) const { return final_mask_[q] != 0; }
  /// Final states in ascending order.
  std::vector<State> finals() const;
  std::size_t final_count() const noexcept;

  /// Runs `word` from `from`; symbols must be valid indices.
  State run(State from, const Word& word) const;

  bool operator==(const Dfa&) const = default;

 private:
  Alphabet alphabet_;
  std::size_t state_count_;
  std::vector<State> table_;
  State initial_;
  std::vector<unsigned char> final_mask_;
};

/// One-state automaton with self-loops accepting every word.
Dfa sigma_star_dfa(const Alphabet& alphabet);
/// One-state automaton with self-loops accepting nothing.
Dfa empty_dfa(const Alphabet& alphabet);

}  // namespace scops
