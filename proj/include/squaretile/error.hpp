#pragma once

#include <stdexcept>
#include <string>

namespace squaretile {

/// Bad user input: malformed text, invalid matrices, unsupported arguments.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class ParseErrorKind { Syntax, NotBijection, NotTransitive };

class ParseError : public InputError {
 public:
  ParseError(ParseErrorKind kind, const std::string& what) : InputError(what), kind_(kind) {}
  ParseErrorKind kind() const noexcept { return kind_; }

 private:
  ParseErrorKind kind_;
};

/// An internal consistency check failed. Always a bug, never bad input.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline void ensure(bool condition, const char* what) {
  if (!condition) throw InvariantViolation(what);
}

}  // namespace squaretile
