#pragma once

#include <cstddef>
#include <string_view>
#include <utility>
#include <vector>

#include "scops/alphabet.hpp"
#include "scops/dfa.hpp"

namespace scops {

/// Nondeterministic automaton with any number of initial states and
/// optional epsilon edges. Built incrementally; all algorithms take it by
/// const reference.
class Nfa {
 public:
  Nfa(Alphabet alphabet, std::size_t state_count);

  /// The same automaton with every transition made a singleton set.
  static Nfa from_dfa(const Dfa& dfa);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  std::size_t state_count() const noexcept { return state_count_; }
  std::size_t symbol_count() const noexcept { return alphabet_.size(); }

  void add_transition(State from, Symbol a, State to);
  void add_epsilon(State from, State to);
  void add_initial(State q);
  void add_final(State q);

  /// Sorted successors of `q` on `a`.
  const std::vector<State>& successors(State q, Symbol a) const {
    return delta_[q * symbol_count() + a];
  }
  const std::vector<State>& epsilon_successors(State q) const { return epsilon_[q]; }
  const std::vector<State>& initials() const noexcept { return initials_; }
  const std::vector<State>& finals() const noexcept { return finals_; }
  bool is_final(State q) const;

  /// All epsilon edges as (from, to), ordered.
  std::vector<std::pair<State, State>> epsilon_edges() const;
  bool has_epsilon() const noexcept;

  bool operator==(const Nfa&) const = default;

 private:
  void check_state(State q) const;

  Alphabet alphabet_;
  std::size_t state_count_;
  std::vector<std::vector<State>> delta_;
  std::vector<std::vector<State>> epsilon_;
  std::vector<State> initials_;
  std::vector<State> finals_;
};

/// Reversal of a complete DFA: edges flipped, initials = old finals,
/// finals = {old initial}. Accepts L(d)^R.
Nfa reverse_nfa(const Dfa& d);

/// Direct simulation with epsilon closure.
bool accepts(const Nfa& n, const Word& word);
bool accepts(const Nfa& n, std::string_view word);

}  // namespace scops
