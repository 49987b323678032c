#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sdcalc {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live on surfaces of different genus.
class GenusMismatch : public Error {
 public:
  GenusMismatch(int expected, int actual)
      : Error("genus mismatch: expected " + std::to_string(expected) + ", got " +
              std::to_string(actual)) {}
};

/// An argument violates an operation's precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A circuit axiom fails at a specific curve (1-based index).
class CircuitError : public PreconditionError {
 public:
  CircuitError(std::size_t index, const std::string& reason)
      : PreconditionError("curve " + std::to_string(index) + ": " + reason),
        index_(index),
        reason_(reason) {}

  std::size_t index() const noexcept { return index_; }
  const std::string& reason() const noexcept { return reason_; }

 private:
  std::size_t index_;
  std::string reason_;
};

/// Internal consistency check failed. Indicates a bug or a mathematical
/// assumption that does not hold for the input; never silently ignored.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace sdcalc
