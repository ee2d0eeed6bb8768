#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

namespace scops {

// Closed-form state counts. All arithmetic is exact on 64-bit unsigned
// integers; arguments must satisfy m, n >= 1 and m + n <= 60.

/// Worst-case size of the minimal DFA for L1^R L2:
/// 3 * 2^(m+n-2) for m, n >= 2; 2^(n-1) for m = 1; 2^(m-1) + 1 for n = 1.
std::uint64_t sc_revcat(int m, int n);

/// Upper bound of the general reversal-catenation construction, 3 * 2^(m+n-2).
std::uint64_t ub_revcat(int m, int n);

/// L1 L2 where L1's DFA has its initial state as its only final state:
/// m(2^n - 1) - 2^(n-1) + 1 for n >= 2, and 1 for n = 1.
std::uint64_t sc_starcat_special(int m, int n);

/// Upper bound on L1* L2 when L1's DFA has k1 >= 1 final states besides
/// its initial state: (3/4 2^m - 1)(2^n - 1) - (2^(m-1) - 2^(m-k1-1))(2^(n-1) - 1).
std::uint64_t ub_starcat_general(int m, int n, int k1);

/// Worst-case size for L1* L2: 5 * 2^(m+n-3) - 2^(m-1) - 2^n + 1 for
/// m, n >= 2; 1 for n = 1; the special-case value for m = 1.
std::uint64_t sc_starcat(int m, int n);

/// Upper bound for the n = 1 reversal-catenation construction, 2^(m-1) + 1.
std::uint64_t ub_revcat_n1(int m);

enum class BoundKind { revcat, starcat, starcat_special };

std::string_view to_string(BoundKind kind);
BoundKind parse_bound_kind(std::string_view text);

/// Query as accepted by the `sc` command: the exact value, or the general
/// star-catenation upper bound when `k1` is given.
std::uint64_t evaluate(BoundKind kind, int m, int n, std::optional<int> k1 = std::nullopt);

}  // namespace scops
