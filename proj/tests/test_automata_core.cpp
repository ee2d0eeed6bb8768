#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "scops/analysis.hpp"
#include "scops/determinize.hpp"
#include "scops/error.hpp"
#include "scops/minimize.hpp"
#include "scops/nfa.hpp"
#include "scops/witnesses.hpp"

using namespace scops;

namespace {

Dfa with_initial(const Dfa& d, State q) {
  return Dfa(d.alphabet(), d.state_count(), d.table(), q, d.finals());
}

// Shortest access word of every reachable state.
std::vector<std::optional<Word>> access_words(const Dfa& d) {
  std::vector<std::optional<Word>> words(d.state_count());
  words[d.initial()] = Word{};
  std::vector<State> queue{d.initial()};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (Symbol a = 0; a < d.symbol_count(); ++a) {
      const State t = d.next(queue[i], a);
      if (!words[t]) {
        Word w = *words[queue[i]];
        w.push_back(a);
        words[t] = w;
        queue.push_back(t);
      }
    }
  }
  return words;
}

}  // namespace

TEST_CASE("Dfa rejects incomplete or out-of-range tables") {
  CHECK_THROWS_AS(Dfa(Alphabet("ab"), 2, {0, 1, 1}, 0, {}), InputError);
  CHECK_THROWS_AS(Dfa(Alphabet("ab"), 2, {0, 1, 1, 2}, 0, {}), InputError);
  CHECK_THROWS_AS(Dfa(Alphabet("ab"), 2, {0, 1, 1, 0}, 2, {}), InputError);
  CHECK_THROWS_AS(Dfa(Alphabet("ab"), 2, {0, 1, 1, 0}, 0, {5}), InputError);
  CHECK_THROWS_AS(Dfa(Alphabet(""), 1, {}, 0, {}), InputError);
  CHECK_THROWS_AS(Alphabet("aa"), InputError);
}

TEST_CASE("accepts") {
  const Dfa m3 = revcat_witness_M(3);
  CHECK(accepts(m3, "aa"));
  CHECK_FALSE(accepts(m3, "aaa"));
  CHECK(accepts(m3, "") == m3.is_final(m3.initial()));
  CHECK(accepts(sigma_star_dfa(Alphabet("ab")), ""));
  CHECK_THROWS_AS(accepts(m3, "ae"), InputError);
  CHECK_THROWS_AS(accepts(m3, Word{7}), InputError);
}

TEST_CASE("determinize a DFA viewed as NFA is the identity up to renumbering") {
  const Dfa d = starcat_witness_B(4);
  const Determinized det = determinize(Nfa::from_dfa(d));
  CHECK(det.dfa.state_count() == d.state_count());
  CHECK(det.dfa == canonical_form(d));
  for (const auto& subset : det.subsets.subsets()) CHECK(subset.size() == 1);
}

TEST_CASE("determinize of the reversed revcat-M machine at m=2") {
  const Determinized det = determinize(reverse_nfa(revcat_witness_M(2)));
  REQUIRE(det.dfa.state_count() == 4);
  CHECK(det.subsets[0] == std::vector<State>{1});
  CHECK(det.subsets[1] == std::vector<State>{0});
  CHECK(det.subsets[2] == std::vector<State>{});
  CHECK(det.subsets[3] == std::vector<State>{0, 1});
  CHECK(det.dfa.final_count() == 2);
}

TEST_CASE("reversal of revcat-M determinizes to 2^m states") {
  for (int m = 2; m <= 5; ++m) {
    CAPTURE(m);
    const Determinized det = determinize(reverse_nfa(revcat_witness_M(m)));
    CHECK(det.dfa.state_count() == (1u << m));
    CHECK(det.dfa.final_count() == (1u << (m - 1)));
    CHECK(minimize_hopcroft(det.dfa).state_count() == (1u << m));
    CHECK(minimize_brzozowski(det.dfa).state_count() == (1u << m));
    // Subset map is a bijection onto the power set.
    std::set<std::vector<State>> distinct(det.subsets.subsets().begin(),
                                          det.subsets.subsets().end());
    CHECK(distinct.size() == det.subsets.size());
  }
}

TEST_CASE("determinize edge cases") {
  SUBCASE("no initial states gives a single dead state") {
    Nfa n(Alphabet("ab"), 3);
    n.add_transition(0, 0, 1);
    n.add_final(1);
    const Determinized det = determinize(n);
    CHECK(det.dfa.state_count() == 1);
    CHECK(det.dfa.final_count() == 0);
    CHECK(det.subsets[0].empty());
  }
  SUBCASE("epsilon cycles terminate and close transitively") {
    Nfa n(Alphabet("a"), 3);
    n.add_initial(0);
    n.add_epsilon(0, 1);
    n.add_epsilon(1, 2);
    n.add_epsilon(2, 0);
    n.add_final(2);
    const Determinized det = determinize(n);
    CHECK(det.subsets[0] == std::vector<State>{0, 1, 2});
    CHECK(det.dfa.is_final(0));
    CHECK(enumerate_accepted(det.dfa, 2) == std::vector<Word>{Word{}});
  }
  SUBCASE("wide automata use the multi-word subset representation") {
    const int size = 70;
    Nfa n(Alphabet("a"), size);
    n.add_initial(0);
    for (State q = 0; q + 1 < size; ++q) n.add_transition(q, 0, q + 1);
    n.add_final(size - 1);
    const Dfa d = subset_construction(n);
    CHECK(d.state_count() == size + 1);
    CHECK(accepts(d, std::string(size - 1, 'a')));
    CHECK_FALSE(accepts(d, std::string(size, 'a')));
  }
}

TEST_CASE("minimize") {
  const Dfa m3 = revcat_witness_M(3);
  // Frozen from the brute-force signature oracle (words up to length 6).
  REQUIRE(oracle::brute_minimal_size(m3, 6) == 3);
  CHECK(minimize_hopcroft(m3).state_count() == 3);

  SUBCASE("two equivalent final sinks merge") {
    const Dfa d = Dfa::from_rows(Alphabet("ab"), {{1, 1, 2, 0}, {2, 1, 2, 3}}, 0, {1, 2});
    CHECK(canonical_form(d).state_count() == 3);
    CHECK(minimize_hopcroft(d).state_count() == 2);
    CHECK(minimize_brzozowski(d).state_count() == 2);
  }
  SUBCASE("dead state is kept") {
    const Dfa d = Dfa::from_rows(Alphabet("ab"), {{1, 2, 2}, {2, 2, 2}}, 0, {1});
    CHECK(minimize_hopcroft(d).state_count() == 3);
    CHECK(minimize_brzozowski(d).state_count() == 3);
  }
  SUBCASE("unreachable states are dropped") {
    const Dfa d = Dfa::from_rows(Alphabet("a"), {{0, 0, 1}}, 0, {2});
    CHECK(minimize_hopcroft(d).state_count() == 1);
  }
  SUBCASE("one-state machines") {
    CHECK(minimize_brzozowski(sigma_star_dfa(Alphabet("ab"))).state_count() == 1);
    CHECK(minimize_hopcroft(empty_dfa(Alphabet("ab"))).state_count() == 1);
  }
  CHECK(minimize_brzozowski(revcat_witness_M(4)).state_count() == 4);
  CHECK(minimize_hopcroft(revcat_witness_M(4)).state_count() == 4);
}

TEST_CASE("equivalent") {
  const Dfa d = revcat_witness_N(4);
  CHECK(equivalent(d, minimize_hopcroft(d)));
  // "a" is accepted by the first and rejected by the second.
  CHECK(accepts(revcat_witness_M(2), "a"));
  CHECK_FALSE(accepts(revcat_n1_witness(4), "a"));
  CHECK_FALSE(equivalent(revcat_witness_M(2), revcat_n1_witness(4)));
  CHECK_THROWS_AS(equivalent(revcat_witness_M(2), starcat_special_witness_A(2)), InputError);
}

TEST_CASE("distinguishing_word") {
  const Dfa m3 = revcat_witness_M(3);
  CHECK_FALSE(distinguishing_word(m3, 1, 1).has_value());
  CHECK(distinguishing_word(m3, 0, 2) == Word{});
  CHECK(distinguishing_word(m3, 0, 1) == m3.alphabet().parse_word("a"));
  CHECK_THROWS_AS(distinguishing_word(m3, 0, 3), InputError);

  SUBCASE("shortest and first in alphabet order") {
    // Distinguished only by "ba" or "bb"; "ba" must win.
    const Dfa d =
        Dfa::from_rows(Alphabet("ab"), {{0, 1, 2, 4, 4}, {2, 3, 4, 2, 4}}, 0, {4});
    const auto w = distinguishing_word(d, 0, 1);
    REQUIRE(w.has_value());
    const auto brute = [&] {
      for (const auto& word : oracle::all_words(2, 4)) {
        if (d.is_final(oracle::run(d, 0, word)) != d.is_final(oracle::run(d, 1, word))) {
          return word;
        }
      }
      return Word{99};
    }();
    CHECK(*w == brute);
    CHECK(d.alphabet().format_word(*w) == "ba");
  }
}

TEST_CASE("enumerate_accepted") {
  CHECK(enumerate_accepted(empty_dfa(Alphabet("ab")), 3).empty());
  const Dfa all = sigma_star_dfa(Alphabet("a"));
  CHECK(enumerate_accepted(all, 2) == std::vector<Word>{Word{}, Word{0}, Word{0, 0}});
  const Dfa n2 = revcat_witness_N(2);
  CHECK(enumerate_accepted(n2, 1) == std::vector<Word>{n2.alphabet().parse_word("d")});
  const Dfa m3 = revcat_witness_M(3);
  std::vector<Word> expected;
  for (const auto& w : oracle::all_words(4, 4)) {
    if (oracle::in_language(m3, w)) expected.push_back(w);
  }
  CHECK(enumerate_accepted(m3, 4) == expected);
}

TEST_CASE("property: determinize preserves the language of random NFAs") {
  std::mt19937 rng(20240611);
  const auto words3 = oracle::all_words(3, 8);
  for (int trial = 0; trial < 150; ++trial) {
    const int states = 1 + trial % 6;
    const std::size_t k = 1 + trial % 3;
    const Nfa n = oracle::random_nfa(rng, states, k);
    const Dfa d = subset_construction(n);
    for (const auto& w : words3) {
      if (std::any_of(w.begin(), w.end(), [&](Symbol s) { return s >= k; })) continue;
      REQUIRE(accepts(d, w) == oracle::nfa_accepts(n, w));
      REQUIRE(accepts(n, w) == oracle::nfa_accepts(n, w));
    }
  }
}

TEST_CASE("property: minimizers agree, are idempotent and match the brute-force count") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 600; ++trial) {
    const int states = 1 + trial % 8;
    const std::size_t k = 1 + (trial / 8) % 4;
    const Dfa d = oracle::random_dfa(rng, states, k);
    const Dfa h = minimize_hopcroft(d);
    const Dfa b = minimize_brzozowski(d);
    REQUIRE(h.state_count() == b.state_count());
    REQUIRE(h == b);
    REQUIRE(minimize_hopcroft(h).state_count() == h.state_count());
    REQUIRE(equivalent(d, h));
    if (k <= 2) {
      REQUIRE(h.state_count() == oracle::brute_minimal_size(d, static_cast<std::size_t>(states)));
    }
  }
}

TEST_CASE("property: double reversal restores the language") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    const Dfa d = oracle::random_dfa(rng, 1 + trial % 7, 1 + trial % 3);
    const Dfa once = determinize(reverse_nfa(d)).dfa;
    const Dfa twice = minimize_hopcroft(determinize(reverse_nfa(once)).dfa);
    REQUIRE(equivalent(twice, d));
  }
}

TEST_CASE("property: distinguishing_word is absent exactly for merged states") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const Dfa d = oracle::random_dfa(rng, 2 + trial % 6, 1 + trial % 3);
    const Dfa min = minimize_hopcroft(d);
    const auto access = access_words(d);
    for (State p = 0; p < d.state_count(); ++p) {
      for (State q = 0; q < d.state_count(); ++q) {
        const auto w = distinguishing_word(d, p, q);
        REQUIRE(w.has_value() == !equivalent(with_initial(d, p), with_initial(d, q)));
        if (w) {
          REQUIRE(d.is_final(d.run(p, *w)) != d.is_final(d.run(q, *w)));
        }
        if (access[p] && access[q]) {
          const bool merged = min.run(0, *access[p]) == min.run(0, *access[q]);
          REQUIRE(merged == !w.has_value());
        }
      }
    }
  }
}
