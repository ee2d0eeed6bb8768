#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace scops {

using State = std::uint32_t;
using Symbol = std::uint32_t;
using Word = std::vector<Symbol>;

/// Ordered finite alphabet. Symbol `i` is displayed as `display()[i]`;
/// the order of the characters is the canonical order used by every
/// breadth-first traversal in the library.
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::string letters);

  /// The first `size` letters of a, b, c, ...
  static Alphabet first(std::size_t size);

  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  const std::string& letters() const noexcept { return letters_; }

  char display(Symbol s) const;
  Symbol index_of(char c) const;
  bool contains(char c) const noexcept;

  Word parse_word(std::string_view text) const;
  std::string format_word(const Word& word) const;

  bool operator==(const Alphabet&) const = default;

 private:
  std::string letters_;
};

}  // namespace scops
