#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace paritycf {

/// Malformed textual input. `position()` is a 0-based character offset.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// An expansion was requested for a rational number.
class RationalInputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A decimal input cannot certify the requested term.
class PrecisionExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two irrational surds over different radicands were combined.
class RadicandMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Two independent routes produced different sets.
class RouteMismatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace paritycf
