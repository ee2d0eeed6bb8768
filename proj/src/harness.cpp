#include "scops/harness.hpp"

#include <algorithm>
#include <sstream>
#include <thread>

#include "scops/analysis.hpp"
#include "scops/determinize.hpp"
#include "scops/error.hpp"
#include "scops/minimize.hpp"
#include "scops/nfa.hpp"
#include "scops/witnesses.hpp"

namespace scops {

std::string format_report(const BoundReport& r) {
  std::ostringstream out;
  out << "op=" << r.op << " m=" << r.m << " n=" << r.n << " k1=";
  if (r.k1) {
    out << *r.k1;
  } else {
    out << '-';
  }
  out << " formula=" << r.formula << " constructed=" << r.constructed << " minimal=" << r.minimal
      << " result=" << (r.pass ? "pass" : "FAIL");
  return out.str();
}

std::string format_search(const SearchResult& r) {
  std::ostringstream out;
  out << "op=" << to_string(r.op) << " m=" << r.m << " n=" << r.n << " sigma=" << r.alphabet_size
      << " max_minimal=" << r.max_minimal << " pairs_examined=" << r.pairs_examined;
  return out.str();
}

Dfa oracle_minimal(Operation op, const Dfa& a, const Dfa& b) {
  return minimize_hopcroft(oracle_pipeline(op, a, b));
}

std::uint64_t oracle_sc(Operation op, const Dfa& a, const Dfa& b) {
  return oracle_minimal(op, a, b).state_count();
}

std::pair<Dfa, Dfa> witness_pair(BoundKind kind, int m, int n) {
  if (m < 1 || n < 1) throw InputError("sizes must be positive");
  switch (kind) {
    case BoundKind::revcat:
      if (m >= 2 && n >= 2) return {revcat_witness_M(m), revcat_witness_N(n)};
      if (m >= 2) {
        Dfa a = revcat_n1_witness(m);
        Dfa b = sigma_star_dfa(a.alphabet());
        return {std::move(a), std::move(b)};
      }
      if (n >= 2) {
        Dfa b = revcat_m1_witness_N(n);
        Dfa a = sigma_star_dfa(b.alphabet());
        return {std::move(a), std::move(b)};
      }
      return {sigma_star_dfa(Alphabet("a")), sigma_star_dfa(Alphabet("a"))};
    case BoundKind::starcat:
      if (m < 2) throw InputError("no star-catenation witness family for m = 1");
      if (n >= 2) return {starcat_witness_A(m), starcat_witness_B(n)};
      return {starcat_witness_A(m), sigma_star_dfa(Alphabet("abcd"))};
    case BoundKind::starcat_special:
      if (m < 2) throw InputError("no special star-catenation witness family for m = 1");
      if (n >= 2) return {starcat_special_witness_A(m), starcat_special_witness_B(n)};
      return {starcat_special_witness_A(m), sigma_star_dfa(Alphabet("abc"))};
  }
  throw InputError("unknown operation");
}

BoundReport verify_witness(BoundKind kind, int m, int n) {
  const auto [a, b] = witness_pair(kind, m, n);
  const Operation op = kind == BoundKind::revcat ? Operation::revcat : Operation::starcat;
  const Dfa direct = combined(op, a, b);
  const Dfa oracle = oracle_minimal(op, a, b);

  BoundReport r;
  r.op = std::string(to_string(kind));
  r.m = m;
  r.n = n;
  r.formula = evaluate(kind, m, n);
  r.constructed = direct.state_count();
  r.minimal = oracle.state_count();
  r.pass = r.minimal == r.formula && r.constructed >= r.minimal && equivalent(direct, oracle);
  return r;
}

BoundReport verify_construction(Operation op, const Dfa& a, const Dfa& b) {
  const Route route = choose_route(op, a, b);
  const Dfa direct = combined(op, a, b);
  const Dfa oracle = oracle_minimal(op, a, b);
  const int m = static_cast<int>(a.state_count());
  const int n = static_cast<int>(b.state_count());

  BoundReport r;
  r.op = std::string(to_string(op));
  r.m = m;
  r.n = n;
  switch (route) {
    case Route::revcat_general: r.formula = ub_revcat(m, n); break;
    case Route::revcat_n1: r.formula = ub_revcat_n1(m); break;
    case Route::starcat_trivial: r.formula = 1; break;
    case Route::starcat_empty: r.formula = static_cast<std::uint64_t>(n); break;
    case Route::starcat_special: r.formula = sc_starcat_special(m, n); break;
    case Route::starcat_general:
      r.k1 = static_cast<int>(extra_final_count(a));
      r.formula = ub_starcat_general(m, n, *r.k1);
      break;
  }
  r.constructed = direct.state_count();
  r.minimal = oracle.state_count();
  r.pass = r.constructed <= r.formula && equivalent(direct, oracle);
  return r;
}

std::optional<std::uint64_t> dfa_space_size(int states, std::size_t alphabet_size) {
  if (states < 1 || alphabet_size < 1) return std::nullopt;
  if (states >= 64) return std::nullopt;
  std::uint64_t total = std::uint64_t{1} << states;
  const std::size_t cells = static_cast<std::size_t>(states) * alphabet_size;
  for (std::size_t i = 0; i < cells; ++i) {
    if (total > UINT64_MAX / static_cast<std::uint64_t>(states)) return std::nullopt;
    total *= static_cast<std::uint64_t>(states);
  }
  return total;
}

Dfa dfa_at(std::uint64_t index, int states, std::size_t alphabet_size) {
  const auto n = static_cast<std::uint64_t>(states);
  std::vector<State> finals;
  for (int q = 0; q < states; ++q) {
    if ((index >> q) & 1U) finals.push_back(static_cast<State>(q));
  }
  index >>= states;
  std::vector<State> table(static_cast<std::size_t>(states) * alphabet_size);
  for (auto& cell : table) {
    cell = static_cast<State>(index % n);
    index /= n;
  }
  return Dfa(Alphabet::first(alphabet_size), static_cast<std::size_t>(states), std::move(table), 0,
             finals);
}

Dfa random_dfa(std::mt19937_64& rng, int states, std::size_t alphabet_size) {
  if (states < 1) throw InputError("random_dfa needs at least one state");
  std::uniform_int_distribution<State> target(0, static_cast<State>(states - 1));
  std::bernoulli_distribution coin(0.5);
  std::vector<State> table(static_cast<std::size_t>(states) * alphabet_size);
  for (auto& cell : table) cell = target(rng);
  std::vector<State> finals;
  for (int q = 0; q < states; ++q) {
    if (coin(rng)) finals.push_back(static_cast<State>(q));
  }
  return Dfa(Alphabet::first(alphabet_size), static_cast<std::size_t>(states), std::move(table), 0,
             finals);
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

struct Best {
  std::uint64_t value = 0;
  std::uint64_t index = UINT64_MAX;

  void offer(std::uint64_t v, std::uint64_t i) {
    if (v > value || (v == value && i < index)) {
      value = v;
      index = i;
    }
  }
};

// Runs body(i) for i in [0, count) over `threads` workers, each worker
// taking a contiguous slice, and merges the per-worker maxima.
template <class Body>
Best parallel_max(std::uint64_t count, unsigned threads, Body&& body) {
  threads = std::max(1U, threads);
  if (count < threads) threads = static_cast<unsigned>(std::max<std::uint64_t>(count, 1));
  std::vector<Best> partial(threads);
  auto work = [&](unsigned w) {
    const std::uint64_t lo = count * w / threads;
    const std::uint64_t hi = count * (w + 1) / threads;
    for (std::uint64_t i = lo; i < hi; ++i) partial[w].offer(body(i), i);
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < threads; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }
  Best best;
  for (const auto& p : partial) {
    if (p.index != UINT64_MAX) best.offer(p.value, p.index);
  }
  return best;
}

}  // namespace

SearchResult exhaustive_search(Operation op, int m, int n, std::size_t alphabet_size,
                               const SearchOptions& options) {
  if (m < 1 || n < 1) throw InputError("sizes must be positive");
  if (alphabet_size < 1 || alphabet_size > 26) throw InputError("alphabet size must be 1..26");
  unsigned threads = options.threads;
  if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());

  SearchResult result;
  result.op = op;
  result.m = m;
  result.n = n;
  result.alphabet_size = alphabet_size;

  if (options.sample_count) {
    const std::uint64_t count = *options.sample_count;
    auto pair_for = [&](std::uint64_t i) {
      std::mt19937_64 rng(splitmix64(options.seed ^ splitmix64(i)));
      Dfa a = random_dfa(rng, m, alphabet_size);
      Dfa b = random_dfa(rng, n, alphabet_size);
      return std::pair<Dfa, Dfa>{std::move(a), std::move(b)};
    };
    const Best best = parallel_max(count, threads, [&](std::uint64_t i) {
      const auto [a, b] = pair_for(i);
      return oracle_sc(op, a, b);
    });
    result.pairs_examined = count;
    if (count > 0) {
      result.max_minimal = best.value;
      result.argmax = pair_for(best.index);
    }
    return result;
  }

  const auto left_count = dfa_space_size(m, alphabet_size);
  const auto right_count = dfa_space_size(n, alphabet_size);
  if (!left_count || !right_count || *left_count > options.budget / *right_count) {
    throw BudgetError("full search space exceeds the budget of " +
                      std::to_string(options.budget) + " pairs");
  }
  // Left operands are transformed once; the right operand varies fastest.
  std::vector<Nfa> lefts;
  lefts.reserve(*left_count);
  for (std::uint64_t i = 0; i < *left_count; ++i) {
    const Dfa a = dfa_at(i, m, alphabet_size);
    lefts.push_back(op == Operation::revcat ? reverse_nfa(a) : star_nfa(a));
  }
  std::vector<Dfa> rights;
  rights.reserve(*right_count);
  for (std::uint64_t j = 0; j < *right_count; ++j) rights.push_back(dfa_at(j, n, alphabet_size));

  const std::uint64_t total = *left_count * *right_count;
  const Best best = parallel_max(total, threads, [&](std::uint64_t idx) {
    const Nfa& left = lefts[idx / *right_count];
    const Dfa& right = rights[idx % *right_count];
    return static_cast<std::uint64_t>(
        minimize_hopcroft(subset_construction(catenation_nfa(left, right))).state_count());
  });
  result.pairs_examined = total;
  result.max_minimal = best.value;
  result.argmax.emplace(dfa_at(best.index / *right_count, m, alphabet_size),
                        rights[best.index % *right_count]);
  return result;
}

std::vector<BoundReport> random_check(std::size_t trials, int m_max, int n_max,
                                      std::size_t sigma_max, std::uint64_t seed) {
  if (m_max < 1 || n_max < 1 || sigma_max < 1) throw InputError("parameters must be positive");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> m_dist(1, m_max);
  std::uniform_int_distribution<int> n_dist(1, n_max);
  std::uniform_int_distribution<std::size_t> sigma_dist(1, sigma_max);
  std::vector<BoundReport> reports;
  reports.reserve(trials);
  for (std::size_t t = 0; t < trials; ++t) {
    const Operation op = t % 2 == 0 ? Operation::revcat : Operation::starcat;
    const std::size_t sigma = sigma_dist(rng);
    const int m = m_dist(rng);
    const int n = n_dist(rng);
    const Dfa a = random_dfa(rng, m, sigma);
    const Dfa b = random_dfa(rng, n, sigma);
    reports.push_back(verify_construction(op, a, b));
  }
  return reports;
}

}  // namespace scops
