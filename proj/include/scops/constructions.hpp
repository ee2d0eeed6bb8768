#pragma once

#include <string_view>
#include <vector>

#include "scops/dfa.hpp"
#include "scops/nfa.hpp"

namespace scops {

/// The two combined operations: L(A)^R L(B) and L(A)* L(B).
enum class Operation { revcat, starcat };

/// How a result automaton is obtained: the dedicated product construction,
/// or the generic compose -> determinize pipeline.
enum class Method { direct, oracle };

std::string_view to_string(Operation op);
std::string_view to_string(Method method);
Operation parse_operation(std::string_view text);
Method parse_method(std::string_view text);

/// L(a) L(b): disjoint union, epsilon edges from each final of `a` to the
/// initial state of `b`, finals are those of `b`.
Nfa catenation_nfa(const Nfa& a, const Dfa& b);

/// L(a)*: adds a fresh state (id `a.state_count()`) that is initial and
/// final and copies the moves of `a.initial()`; every transition entering
/// a final state also enters `a.initial()`.
Nfa star_nfa(const Dfa& a);

/// Components of each output state of a pair construction, indexed by
/// output state id. For revcat_direct `left` is the subset of m's states
/// (provenance of the reversed-and-determinized first operand); for the
/// star-catenation constructions it is the first-operand state or subset.
/// `right` is always the subset of the second operand's states.
struct PairProvenance {
  std::vector<std::vector<State>> left;
  std::vector<std::vector<State>> right;
};

/// Product DFA for L(m)^R L(n). First component: reachable subsets of the
/// reversed `m`; second: subset of `n`'s states, with n's initial state
/// adjoined whenever the first component contains m's initial state.
/// Only reachable pairs are built; at most 3 * 2^(|m|+|n|-2) states.
Dfa revcat_direct(const Dfa& m, const Dfa& n, PairProvenance* provenance = nullptr);

/// L(m)^R L(N) for a one-state N, given by whether N accepts (Sigma*) or
/// not (empty). Final subsets of the reversed `m` collapse into one
/// absorbing final state; at most 2^(|m|-1) + 1 states.
Dfa revcat_n1_direct(const Dfa& m, bool n_accepting);

/// L(a) L(b) (= L(a)* L(b)) when the only final state of `a` is its
/// initial state. States are pairs <q, T> with T a nonempty subset of b.
/// Throws ShapeError unless a.finals == {a.initial} and |b| >= 2.
Dfa starcat_special_direct(const Dfa& a, const Dfa& b,
                           PairProvenance* provenance = nullptr);

/// L(a)* L(b) when `a` has a final state other than its initial state.
/// States are pairs <P, T> of subsets; whenever P meets the finals of `a`,
/// a's initial state joins P and b's initial state joins T.
/// Throws ShapeError when the shape does not apply.
Dfa starcat_general_direct(const Dfa& a, const Dfa& b,
                           PairProvenance* provenance = nullptr);

/// Which direct construction `combined` picks for a pair of operands.
enum class Route {
  revcat_general,  ///< revcat_direct
  revcat_n1,       ///< revcat_n1_direct
  starcat_trivial, ///< one-state second operand: result is Sigma* or empty
  starcat_empty,   ///< L(a) is empty, so L(a)* L(b) = L(b)
  starcat_special, ///< starcat_special_direct
  starcat_general, ///< starcat_general_direct
};

std::string_view to_string(Route route);
Route choose_route(Operation op, const Dfa& a, const Dfa& b);

/// Dispatches to the matching direct construction; minimizes the result
/// when asked.
Dfa combined(Operation op, const Dfa& a, const Dfa& b, bool minimize_result = false);

/// The generic pipeline for the same language: reverse_nfa / star_nfa,
/// catenation_nfa, then subset construction. Not minimized.
Dfa oracle_pipeline(Operation op, const Dfa& a, const Dfa& b);

/// Number of final states of `a` other than its initial state.
std::size_t extra_final_count(const Dfa& a);

}  // namespace scops
