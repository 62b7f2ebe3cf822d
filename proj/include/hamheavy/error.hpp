#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hamheavy {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed graph6 input. `offset` is the zero-based byte position of the
// offending character within the line.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : Error(what + " (byte " + std::to_string(offset) + ")"), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

// A request exceeds a documented size cap (vertex count, segment length, ...).
class CapacityError : public Error {
 public:
  using Error::Error;
};

// An argument violates an operation's precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// An internal consistency check failed. Always a bug in this library.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace hamheavy
