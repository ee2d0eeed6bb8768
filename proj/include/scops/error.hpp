#pragma once

#include <stdexcept>
#include <string>

namespace scops {

/// Malformed input: out-of-range ids, symbols outside the alphabet,
/// alphabet mismatches between operands, nonpositive sizes.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The operands do not have the shape a construction requires
/// (e.g. the special star-catenation construction on an automaton whose
/// only final state is not the initial one).
class ShapeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Full enumeration would exceed the configured pair budget.
class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Schema violation in an automaton document; `path()` names the field.
class DocumentError : public std::runtime_error {
 public:
  DocumentError(std::string path, const std::string& what)
      : std::runtime_error(path + ": " + what), path_(std::move(path)) {}

  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

}  // namespace scops
