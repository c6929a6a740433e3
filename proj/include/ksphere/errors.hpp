#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace ksphere {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Width/size caps (n > 16, exhaustive enumeration guards, order caps).
class SizeGuardError : public Error {
 public:
  using Error::Error;
};

// Expression or serialization syntax error; `position` is a 0-based offset
// into the offending input.
class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& what)
      : Error(what + " (at position " + std::to_string(position) + ")"),
        position(position) {}
  std::size_t position;
};

// |chi| is not a power of two (or chi == 0). Either an implementation bug or
// a genuine violation of the concentration theorem; never rounded over.
class NonPowerOfTwoError : public Error {
 public:
  using Error::Error;
};

// w1 != 0, so there is no w3 obstruction class to extract.
class NotOrientableError : public Error {
 public:
  using Error::Error;
};

// Trace replay rejected a move. index == -1 refers to the initial state.
class InvalidMoveError : public Error {
 public:
  InvalidMoveError(std::ptrdiff_t index, const std::string& reason)
      : Error("invalid move at index " + std::to_string(index) + ": " + reason),
        index(index),
        reason(reason) {}
  std::ptrdiff_t index;
  std::string reason;
};

class CheckpointMismatchError : public Error {
 public:
  CheckpointMismatchError(std::size_t index, std::int64_t expected, std::int64_t got)
      : Error("checkpoint mismatch at move " + std::to_string(index) + ": expected " +
              std::to_string(expected) + ", got " + std::to_string(got)),
        index(index),
        expected(expected),
        got(got) {}
  std::size_t index;
  std::int64_t expected;
  std::int64_t got;
};

// The two engines disagreed on a result they must both produce.
class EngineMismatchError : public Error {
 public:
  using Error::Error;
};

// A runtime invariant of the reduction (degree decrease, pattern match,
// pass bound) failed. Loud by design; carries the offending state.
class ReduceInvariantError : public Error {
 public:
  using Error::Error;
};

}  // namespace ksphere
