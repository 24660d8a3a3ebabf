#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace singlab {

// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed text input (polynomial, rational, corpus record).
// Carries the byte offset of the first offending character.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : Error(message + " (at position " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// Operands were built over different variable lists.
class RingMismatchError : public Error {
 public:
  using Error::Error;
};

// A configurable cap (pair count, basis size, reduction steps) was hit.
// Distinct from every mathematical failure mode.
class ResourceLimitError : public Error {
 public:
  using Error::Error;
};

// Precondition violation: bad family parameters, nonsingular input where a
// singularity is required, zero denominator, and the like.
class DomainError : public Error {
 public:
  using Error::Error;
};

// An internal invariant failed. Signals a bug, never a math outcome.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace singlab
