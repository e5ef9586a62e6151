#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace motint {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Arguments violate an operation's precondition (zero denominator, non-prime
/// modulus, inseparable reduction, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Input text could not be parsed. `position` is a 0-based byte offset.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : Error(message + " at position " + std::to_string(position)), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// A configured enumeration or symbolic-size budget would be exceeded.
class BudgetError : public Error {
 public:
  using Error::Error;
};

/// An internal consistency check failed (e.g. an inexact ghost division).
/// Always indicates a bug, never bad input.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace motint

#define MOTINT_ASSERT(cond, msg)                                                  \
  do {                                                                            \
    if (!(cond)) throw ::motint::InternalError(std::string("assertion failed: ") + \
                                               (msg));                            \
  } while (0)
