#pragma once

#include <stdexcept>
#include <string>

namespace satgenus {

/// Base class for every error raised by the library. The CLI maps the
/// concrete subclass onto a process exit code.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed text input (braid words, cycle notation). `position` is the
/// zero-based character offset of the offending token.
class ParseError : public Error {
public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " (at offset " + std::to_string(position) + ")"), position_(position) {}

  std::size_t position() const noexcept { return position_; }

private:
  std::size_t position_;
};

/// A precondition on the inputs of an operation does not hold.
class ValidationError : public Error {
public:
  using Error::Error;
};

/// An exhaustive computation would exceed its configured budget.
class BudgetExceeded : public Error {
public:
  using Error::Error;
};

/// A mathematical invariant that must always hold was found broken.
class InvariantViolation : public Error {
public:
  using Error::Error;
};

}  // namespace satgenus
