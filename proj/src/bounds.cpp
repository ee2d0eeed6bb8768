#include "scops/bounds.hpp"

#include <string>

#include "scops/error.hpp"

namespace scops {

namespace {

void check_sizes(int m, int n) {
  if (m < 1 || n < 1) {
    throw InputError("sizes must be positive, got m=" + std::to_string(m) +
                     " n=" + std::to_string(n));
  }
  if (m + n > 60) throw InputError("m + n must not exceed 60");
}

std::uint64_t pow2(int e) { return std::uint64_t{1} << e; }

}  // namespace

std::uint64_t ub_revcat(int m, int n) {
  check_sizes(m, n);
  return 3 * pow2(m + n - 2);
}

std::uint64_t ub_revcat_n1(int m) {
  check_sizes(m, 1);
  return pow2(m - 1) + 1;
}

std::uint64_t sc_revcat(int m, int n) {
  check_sizes(m, n);
  if (m == 1) return pow2(n - 1);
  if (n == 1) return pow2(m - 1) + 1;
  return 3 * pow2(m + n - 2);
}

std::uint64_t sc_starcat_special(int m, int n) {
  check_sizes(m, n);
  if (n == 1) return 1;
  return static_cast<std::uint64_t>(m) * (pow2(n) - 1) - pow2(n - 1) + 1;
}

std::uint64_t ub_starcat_general(int m, int n, int k1) {
  check_sizes(m, n);
  if (m < 2 || n < 2) throw InputError("general star-catenation bound needs m, n >= 2");
  if (k1 < 1 || k1 > m - 1) {
    throw InputError("k1 must lie in 1.." + std::to_string(m - 1) + ", got " + std::to_string(k1));
  }
  // (3/4 2^m - 1) written as 3 * 2^(m-2) - 1.
  const std::uint64_t first = (3 * pow2(m - 2) - 1) * (pow2(n) - 1);
  const std::uint64_t removed = (pow2(m - 1) - pow2(m - k1 - 1)) * (pow2(n - 1) - 1);
  return first - removed;
}

std::uint64_t sc_starcat(int m, int n) {
  check_sizes(m, n);
  if (n == 1) return 1;
  if (m == 1) return sc_starcat_special(1, n);
  return 5 * pow2(m + n - 3) - pow2(m - 1) - pow2(n) + 1;
}

std::string_view to_string(BoundKind kind) {
  switch (kind) {
    case BoundKind::revcat: return "revcat";
    case BoundKind::starcat: return "starcat";
    case BoundKind::starcat_special: return "starcat-special";
  }
  return "?";
}

BoundKind parse_bound_kind(std::string_view text) {
  if (text == "revcat") return BoundKind::revcat;
  if (text == "starcat") return BoundKind::starcat;
  if (text == "starcat-special") return BoundKind::starcat_special;
  throw InputError("unknown operation '" + std::string(text) + "'");
}

std::uint64_t evaluate(BoundKind kind, int m, int n, std::optional<int> k1) {
  if (k1) {
    if (kind != BoundKind::starcat) throw InputError("--k1 only applies to starcat");
    return ub_starcat_general(m, n, *k1);
  }
  switch (kind) {
    case BoundKind::revcat: return sc_revcat(m, n);
    case BoundKind::starcat: return sc_starcat(m, n);
    case BoundKind::starcat_special: return sc_starcat_special(m, n);
  }
  throw InputError("unknown operation");
}

}  // namespace scops
