#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace plausible {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed formula text. `position` is the 0-based byte offset of the
/// offending token.
class ParseError : public Error {
 public:
  enum class Kind { Syntax, UnknownToken };

  ParseError(Kind kind, std::size_t position, const std::string& message)
      : Error(message + " at position " + std::to_string(position)),
        kind_(kind),
        position_(position) {}

  Kind kind() const { return kind_; }
  std::size_t position() const { return position_; }

 private:
  Kind kind_;
  std::size_t position_;
};

/// A formula uses an operator its dialect does not admit.
class DialectError : public Error {
 public:
  using Error::Error;
};

/// A world index outside 0..n-1, or a world count out of the supported range.
class RangeError : public Error {
 public:
  using Error::Error;
};

/// instantiate() was handed a binding that misses a metavariable.
class UnboundMetavariableError : public Error {
 public:
  using Error::Error;
};

/// Structurally malformed proof (dangling or forward line references,
/// wrong reference counts, empty line list).
class ProofFormatError : public Error {
 public:
  using Error::Error;
};

/// Search bounds exceed the enumeration cap of the model class.
class BoundsError : public Error {
 public:
  using Error::Error;
};

/// An operation that requires a valid plausibility algebra received one that
/// fails a1-a4.
class InvalidAlgebraError : public Error {
 public:
  using Error::Error;
};

/// Malformed input file (JSON shape, unknown keys, out-of-range indices).
class FormatError : public Error {
 public:
  using Error::Error;
};

}  // namespace plausible
