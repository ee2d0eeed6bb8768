#pragma once

#include <optional>
#include <span>
#include <string_view>

#include "scops/dfa.hpp"

namespace scops {

/// Worst-case operand for L(M)^R L(N), m >= 2, over {a,b,c,d}:
/// a cycles all states, b and c permute/merge the top two, d is identity.
Dfa revcat_witness_M(int m);
/// Second operand for L(M)^R L(N), n >= 2, over {a,b,c,d}: d cycles,
/// c resets to 0, a and b are identities.
Dfa revcat_witness_N(int n);
/// First operand for L(M)^R Sigma*: the two- and three-state machines over
/// {a,b} and {a,b,c} for m = 2, 3, and a four-letter family for m >= 4.
Dfa revcat_n1_witness(int m);
/// Star-closed first operand over {a,b,c}: a cycles, finals = {initial}.
Dfa starcat_special_witness_A(int m);
/// Second operand for the star-closed case over {a,b,c}.
Dfa starcat_special_witness_B(int n);
/// First operand for L(A)* L(B), over {a,b,c,d}, finals {m-1}.
Dfa starcat_witness_A(int m);
/// Second operand for L(A)* L(B), over {a,b,c,d}, finals {n-1}.
Dfa starcat_witness_B(int n);
/// Second operand for Sigma* L(N) over {a,b}: a cycles, b fixes 0 and
/// cycles the remaining states. Reaches 2^(n-1) states (n >= 2).
Dfa revcat_m1_witness_N(int n);

enum class WitnessFamily {
  revcat_M,
  revcat_N,
  revcat_n1,
  revcat_m1_N,
  starcat_special_A,
  starcat_special_B,
  starcat_A,
  starcat_B,
  sigma_star,
  empty,
};

std::string_view to_string(WitnessFamily family);
WitnessFamily parse_witness_family(std::string_view tag);
std::span<const WitnessFamily> all_witness_families();
/// Smallest size the family is defined for.
int minimum_size(WitnessFamily family);

/// Builds a family member. `size` is the state count; `alphabet_size` only
/// matters for the one-state sigma-star / empty machines.
Dfa make_witness(WitnessFamily family, int size, std::size_t alphabet_size = 2);

}  // namespace scops
