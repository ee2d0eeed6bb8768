#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "scops/dfa.hpp"

namespace scops {

bool accepts(const Dfa& d, const Word& word);
/// Convenience overload: each character is looked up in `d.alphabet()`.
bool accepts(const Dfa& d, std::string_view word);

/// L(a) == L(b), decided by a breadth-first walk of the product automaton
/// looking for a pair that disagrees on acceptance.
bool equivalent(const Dfa& a, const Dfa& b);

/// Shortest word accepted from exactly one of `p`, `q`; among the shortest,
/// the first in alphabet order. Empty optional iff the states are equivalent.
std::optional<Word> distinguishing_word(const Dfa& d, State p, State q);

/// Every accepted word of length <= max_len, ordered by length and then
/// lexicographically by alphabet order.
std::vector<Word> enumerate_accepted(const Dfa& d, std::size_t max_len);

}  // namespace scops
