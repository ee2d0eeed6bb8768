#include "scops/alphabet.hpp"

#include <algorithm>
#include <cctype>

#include "scops/error.hpp"

namespace scops {

Alphabet::Alphabet(std::string letters) : letters_(std::move(letters)) {
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    const auto c = static_cast<unsigned char>(letters_[i]);
    if (!std::isgraph(c)) {
      throw InputError("alphabet letters must be printable characters");
    }
    if (letters_.find(letters_[i], i + 1) != std::string::npos) {
      throw InputError(std::string("duplicate alphabet letter '") + letters_[i] + "'");
    }
  }
}

Alphabet Alphabet::first(std::size_t size) {
  if (size > 26) throw InputError("alphabet larger than 26 letters");
  std::string letters;
  for (std::size_t i = 0; i < size; ++i) letters.push_back(static_cast<char>('a' + i));
  return Alphabet(std::move(letters));
}

char Alphabet::display(Symbol s) const {
  if (s >= letters_.size()) throw InputError("symbol index out of range");
  return letters_[s];
}

Symbol Alphabet::index_of(char c) const {
  const auto pos = letters_.find(c);
  if (pos == std::string::npos) {
    throw InputError(std::string("symbol '") + c + "' is not in alphabet {" + letters_ + "}");
  }
  return static_cast<Symbol>(pos);
}

bool Alphabet::contains(char c) const noexcept { return letters_.find(c) != std::string::npos; }

Word Alphabet::parse_word(std::string_view text) const {
  Word word;
  word.reserve(text.size());
  for (char c : text) word.push_back(index_of(c));
  return word;
}

std::string Alphabet::format_word(const Word& word) const {
  std::string out;
  out.reserve(word.size());
  for (Symbol s : word) out.push_back(display(s));
  return out;
}

}  // namespace scops
