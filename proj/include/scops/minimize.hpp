#pragma once

#include "scops/dfa.hpp"

namespace scops {

/// Drops unreachable states and renumbers the rest in breadth-first order
/// from the initial state (successors in alphabet order).
Dfa canonical_form(const Dfa& d);

/// Minimal complete DFA by Hopcroft partition refinement. Unreachable
/// states are removed first; a dead state is kept (and counted) when the
/// language needs one. Output is in canonical numbering.
Dfa minimize_hopcroft(const Dfa& d);

/// Minimal complete DFA by double reversal, determinize(reverse(determinize(reverse(d)))).
/// Used as a cross-check of `minimize_hopcroft`.
Dfa minimize_brzozowski(const Dfa& d);

inline Dfa minimize(const Dfa& d) { return minimize_hopcroft(d); }

}  // namespace scops
