#include "scops/witnesses.hpp"

#include <array>
#include <string>

#include "scops/error.hpp"

namespace scops {

namespace {

using Rows = std::vector<std::vector<State>>;

void require_size(int size, int minimum, std::string_view name) {
  if (size < minimum) {
    throw InputError(std::string(name) + " needs size >= " + std::to_string(minimum) + ", got " +
                     std::to_string(size));
  }
}

std::vector<State> identity(int size) {
  std::vector<State> row(size);
  for (int i = 0; i < size; ++i) row[i] = static_cast<State>(i);
  return row;
}

std::vector<State> cycle(int size) {
  std::vector<State> row(size);
  for (int i = 0; i < size; ++i) row[i] = static_cast<State>((i + 1) % size);
  return row;
}

// i -> i for i <= m-2, m-1 -> m-2.
std::vector<State> merge_top(int m) {
  auto row = identity(m);
  row[m - 1] = static_cast<State>(m - 2);
  return row;
}

// Swaps m-2 and m-1, identity below.
std::vector<State> swap_top(int m) {
  auto row = identity(m);
  row[m - 2] = static_cast<State>(m - 1);
  row[m - 1] = static_cast<State>(m - 2);
  return row;
}

// Fixes 0, cycles 1 -> 2 -> ... -> size-1 -> 0.
std::vector<State> cycle_fixing_zero(int size) {
  auto row = cycle(size);
  row[0] = 0;
  return row;
}

State last(int size) { return static_cast<State>(size - 1); }

}  // namespace

Dfa revcat_witness_M(int m) {
  require_size(m, 2, "revcat_witness_M");
  return Dfa::from_rows(Alphabet("abcd"), Rows{cycle(m), merge_top(m), swap_top(m), identity(m)}, 0,
                        {last(m)});
}

Dfa revcat_witness_N(int n) {
  require_size(n, 2, "revcat_witness_N");
  // Only states 1..n-1 are given for a, b, c; state 0 gets self-loops.
  return Dfa::from_rows(Alphabet("abcd"),
                        Rows{identity(n), identity(n), std::vector<State>(n, 0), cycle(n)}, 0,
                        {last(n)});
}

Dfa revcat_n1_witness(int m) {
  require_size(m, 2, "revcat_n1_witness");
  if (m == 2) return Dfa::from_rows(Alphabet("ab"), Rows{{1, 0}, {0, 0}}, 0, {1});
  if (m == 3) {
    return Dfa::from_rows(Alphabet("abc"), Rows{{1, 2, 0}, {0, 1, 1}, {0, 2, 1}}, 0, {2});
  }
  std::vector<State> d(m);
  d[0] = 0;
  for (int i = 1; i <= m - 2; ++i) d[i] = static_cast<State>(i + 1);
  d[m - 1] = 1;
  return Dfa::from_rows(Alphabet("abcd"), Rows{cycle(m), merge_top(m), swap_top(m), d}, 0,
                        {last(m)});
}

Dfa starcat_special_witness_A(int m) {
  require_size(m, 2, "starcat_special_witness_A");
  return Dfa::from_rows(Alphabet("abc"), Rows{cycle(m), identity(m), identity(m)}, 0, {0});
}

Dfa starcat_special_witness_B(int n) {
  require_size(n, 2, "starcat_special_witness_B");
  return Dfa::from_rows(Alphabet("abc"), Rows{identity(n), cycle(n), cycle_fixing_zero(n)}, 0,
                        {last(n)});
}

Dfa starcat_witness_A(int m) {
  require_size(m, 2, "starcat_witness_A");
  return Dfa::from_rows(Alphabet("abcd"),
                        Rows{cycle(m), cycle_fixing_zero(m), identity(m), identity(m)}, 0,
                        {last(m)});
}

Dfa starcat_witness_B(int n) {
  require_size(n, 2, "starcat_witness_B");
  return Dfa::from_rows(Alphabet("abcd"),
                        Rows{identity(n), identity(n), cycle(n), std::vector<State>(n, 0)}, 0,
                        {last(n)});
}

Dfa revcat_m1_witness_N(int n) {
  require_size(n, 2, "revcat_m1_witness_N");
  return Dfa::from_rows(Alphabet("ab"), Rows{cycle(n), cycle_fixing_zero(n)}, 0, {last(n)});
}

namespace {

struct FamilyInfo {
  WitnessFamily family;
  std::string_view tag;
  int minimum;
};

constexpr std::array<FamilyInfo, 10> kFamilies{{
    {WitnessFamily::revcat_M, "revcat-M", 2},
    {WitnessFamily::revcat_N, "revcat-N", 2},
    {WitnessFamily::revcat_n1, "revcat-n1", 2},
    {WitnessFamily::revcat_m1_N, "revcat-m1-N", 2},
    {WitnessFamily::starcat_special_A, "starcat-special-A", 2},
    {WitnessFamily::starcat_special_B, "starcat-special-B", 2},
    {WitnessFamily::starcat_A, "starcat-A", 2},
    {WitnessFamily::starcat_B, "starcat-B", 2},
    {WitnessFamily::sigma_star, "sigma-star", 1},
    {WitnessFamily::empty, "empty", 1},
}};

constexpr std::array<WitnessFamily, 10> kFamilyList{
    WitnessFamily::revcat_M,          WitnessFamily::revcat_N,
    WitnessFamily::revcat_n1,         WitnessFamily::revcat_m1_N,
    WitnessFamily::starcat_special_A, WitnessFamily::starcat_special_B,
    WitnessFamily::starcat_A,         WitnessFamily::starcat_B,
    WitnessFamily::sigma_star,        WitnessFamily::empty,
};

const FamilyInfo& info(WitnessFamily family) {
  for (const auto& entry : kFamilies) {
    if (entry.family == family) return entry;
  }
  throw InputError("unknown witness family");
}

}  // namespace

std::string_view to_string(WitnessFamily family) { return info(family).tag; }

WitnessFamily parse_witness_family(std::string_view tag) {
  for (const auto& entry : kFamilies) {
    if (entry.tag == tag) return entry.family;
  }
  throw InputError("unknown witness family '" + std::string(tag) + "'");
}

std::span<const WitnessFamily> all_witness_families() { return kFamilyList; }

int minimum_size(WitnessFamily family) { return info(family).minimum; }

Dfa make_witness(WitnessFamily family, int size, std::size_t alphabet_size) {
  switch (family) {
    case WitnessFamily::revcat_M: return revcat_witness_M(size);
    case WitnessFamily::revcat_N: return revcat_witness_N(size);
    case WitnessFamily::revcat_n1: return revcat_n1_witness(size);
    case WitnessFamily::revcat_m1_N: return revcat_m1_witness_N(size);
    case WitnessFamily::starcat_special_A: return starcat_special_witness_A(size);
    case WitnessFamily::starcat_special_B: return starcat_special_witness_B(size);
    case WitnessFamily::starcat_A: return starcat_witness_A(size);
    case WitnessFamily::starcat_B: return starcat_witness_B(size);
    case WitnessFamily::sigma_star:
    case WitnessFamily::empty:
      if (size != 1) throw InputError("one-state families take size 1");
      if (alphabet_size == 0) throw InputError("alphabet must be nonempty");
      return family == WitnessFamily::sigma_star ? sigma_star_dfa(Alphabet::first(alphabet_size))
                                                 : empty_dfa(Alphabet::first(alphabet_size));
  }
  throw InputError("unknown witness family");
}

}  // namespace scops
