#pragma once

// Subset representations shared by the subset-construction style
// algorithms. Two flavours: a single machine word for automata with at
// most 64 states (the hot path of exhaustive search), and a dynamic word
// vector for anything larger. Both expose the same free-function surface
// so the algorithms can be written once as templates.

#include <bit>
#include <cstdint>
#include <functional>
#include <vector>

#include "scops/alphabet.hpp"

namespace scops::detail {

class Bits {
 public:
  Bits() = default;
  explicit Bits(std::size_t nbits) : words_((nbits + 63) / 64, 0) {}

  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }

  Bits& operator|=(const Bits& o) {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= o.words_[w];
    return *this;
  }
  bool intersects(const Bits& o) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      if (words_[w] & o.words_[w]) return true;
    }
    return false;
  }
  bool none() const {
    for (auto w : words_) {
      if (w) return false;
    }
    return true;
  }
  void clear() { std::fill(words_.begin(), words_.end(), 0); }

  const std::vector<std::uint64_t>& words() const noexcept { return words_; }
  bool operator==(const Bits&) const = default;

  std::size_t hash() const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (auto w : words_) h = (h ^ std::hash<std::uint64_t>{}(w)) * 0x100000001b3ULL;
    return h;
  }

 private:
  std::vector<std::uint64_t> words_;
};

struct BitsHash {
  std::size_t operator()(const Bits& b) const noexcept { return b.hash(); }
};

// Free-function surface over both representations.

inline std::uint64_t make_set(std::uint64_t*, std::size_t) { return 0; }
inline Bits make_set(Bits*, std::size_t nbits) { return Bits(nbits); }

inline void set_bit(std::uint64_t& s, std::size_t i) { s |= std::uint64_t{1} << i; }
inline void set_bit(Bits& s, std::size_t i) { s.set(i); }

inline bool test_bit(std::uint64_t s, std::size_t i) { return (s >> i) & 1U; }
inline bool test_bit(const Bits& s, std::size_t i) { return s.test(i); }

inline void or_into(std::uint64_t& s, std::uint64_t o) { s |= o; }
inline void or_into(Bits& s, const Bits& o) { s |= o; }

inline bool intersects(std::uint64_t s, std::uint64_t o) { return (s & o) != 0; }
inline bool intersects(const Bits& s, const Bits& o) { return s.intersects(o); }

inline bool is_empty(std::uint64_t s) { return s == 0; }
inline bool is_empty(const Bits& s) { return s.none(); }

inline void clear_set(std::uint64_t& s) { s = 0; }
inline void clear_set(Bits& s) { s.clear(); }

template <class F>
void for_each_bit(std::uint64_t s, F&& f) {
  while (s) {
    f(static_cast<State>(std::countr_zero(s)));
    s &= s - 1;
  }
}

template <class F>
void for_each_bit(const Bits& s, F&& f) {
  const auto& words = s.words();
  for (std::size_t w = 0; w < words.size(); ++w) {
    auto word = words[w];
    while (word) {
      f(static_cast<State>(w * 64 + std::countr_zero(word)));
      word &= word - 1;
    }
  }
}

template <class Set>
std::vector<State> to_list(const Set& s) {
  std::vector<State> out;
  for_each_bit(s, [&](State q) { out.push_back(q); });
  return out;
}

template <class Set>
struct SetHash {
  std::size_t operator()(const Set& s) const noexcept {
    if constexpr (std::is_same_v<Set, Bits>) {
      return s.hash();
    } else {
      return std::hash<std::uint64_t>{}(s * 0x9e3779b97f4a7c15ULL);
    }
  }
};

}  // namespace scops::detail
