#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "scops/bounds.hpp"
#include "scops/constructions.hpp"
#include "scops/dfa.hpp"

namespace scops {

/// One verification row.
struct BoundReport {
  std::string op;
  int m = 0;
  int n = 0;
  std::optional<int> k1;
  std::uint64_t formula = 0;
  std::uint64_t constructed = 0;  ///< reachable states of the direct construction
  std::uint64_t minimal = 0;      ///< minimal DFA size from the oracle pipeline
  bool pass = false;
};

/// `op=revcat m=2 n=2 k1=- formula=12 constructed=12 minimal=12 result=pass`
std::string format_report(const BoundReport& report);

struct SearchResult {
  Operation op = Operation::revcat;
  int m = 0;
  int n = 0;
  std::size_t alphabet_size = 0;
  std::uint64_t max_minimal = 0;
  std::optional<std::pair<Dfa, Dfa>> argmax;
  std::uint64_t pairs_examined = 0;
};

std::string format_search(const SearchResult& result);

struct SearchOptions {
  /// Sampled mode: this many random pairs instead of the full space.
  std::optional<std::uint64_t> sample_count;
  std::uint64_t seed = 1;
  /// Full mode refuses pair spaces larger than this.
  std::uint64_t budget = 20'000'000;
  /// Worker threads; 0 picks the hardware concurrency. Results do not
  /// depend on this value.
  unsigned threads = 0;
};

/// Size of the minimal complete DFA for L(a)^R L(b) or L(a)* L(b), computed
/// only through reverse_nfa / star_nfa, catenation_nfa, determinize and
/// minimize.
std::uint64_t oracle_sc(Operation op, const Dfa& a, const Dfa& b);

/// Minimal DFA from the oracle pipeline.
Dfa oracle_minimal(Operation op, const Dfa& a, const Dfa& b);

/// Builds the worst-case pair for (kind, m, n), runs the direct
/// construction and the oracle, and compares against the exact value.
/// Throws InputError for sizes no witness family covers.
BoundReport verify_witness(BoundKind kind, int m, int n);

/// The witness operands used by `verify_witness`.
std::pair<Dfa, Dfa> witness_pair(BoundKind kind, int m, int n);

/// Checks the direct construction chosen by `combined` against the oracle
/// and against the size bound of that construction (the general
/// star-catenation bound is evaluated at the operand's own k1).
BoundReport verify_construction(Operation op, const Dfa& a, const Dfa& b);

/// Largest oracle_sc over all complete DFA pairs with the given sizes and
/// alphabet (initial state fixed to 0), or over a seeded random sample.
/// Ties keep the first pair in enumeration order.
SearchResult exhaustive_search(Operation op, int m, int n, std::size_t alphabet_size,
                               const SearchOptions& options = {});

/// Number of complete DFAs with `states` states over `alphabet_size`
/// letters and initial state 0; nullopt when it does not fit in 64 bits.
std::optional<std::uint64_t> dfa_space_size(int states, std::size_t alphabet_size);

/// The `index`-th DFA of that space: the low `states` bits choose the
/// final set, the remaining digits (base `states`) fill the table row-major.
Dfa dfa_at(std::uint64_t index, int states, std::size_t alphabet_size);

/// Uniformly random complete DFA with initial state 0.
Dfa random_dfa(std::mt19937_64& rng, int states, std::size_t alphabet_size);

/// `trials` random pairs (sizes uniform in 1..m_max, 1..n_max, alphabet in
/// 1..sigma_max); even trials check revcat, odd trials starcat.
std::vector<BoundReport> random_check(std::size_t trials, int m_max, int n_max,
                                      std::size_t sigma_max, std::uint64_t seed);

}  // namespace scops
