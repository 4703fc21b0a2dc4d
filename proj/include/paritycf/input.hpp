#pragma once

// Inputs: an irrational real number known either exactly as a quadratic surd
// or through a certified enclosure coming from a truncated decimal literal.

#include <cstdint>
#include <string>
#include <string_view>

#include "paritycf/exact.hpp"

namespace paritycf {

class RealInput {
 public:
  /// Throws RationalInputError when x is rational.
  static RealInput surd(QuadraticSurd x);
  /// x lies in the closed interval [lo, hi] and is assumed irrational.
  static RealInput interval(Rational lo, Rational hi, std::string literal);

  bool is_surd() const { return exact_; }
  const QuadraticSurd& value() const { return surd_; }
  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }

  /// Sign of A*x + B. For enclosures the sign must agree on both ends,
  /// otherwise PrecisionExhausted is thrown.
  int sign_affine(const BigInt& A, const BigInt& B) const;
  /// Throws PrecisionExhausted when the enclosure straddles an integer.
  BigInt floor() const;
  double approx() const;
  /// Normalized surd text, or the decimal literal as given.
  std::string str() const;

 private:
  RealInput() = default;
  bool exact_ = true;
  QuadraticSurd surd_;
  Rational lo_, hi_;
  std::string literal_;
};

/// Grammar (whitespace-insensitive):
///   expr    := term (('+' | '-') term)*
///   term    := unary (('*' | '/') unary)*
///   unary   := ('+' | '-') unary | primary
///   primary := integer | decimal | 'sqrt' '(' integer ')' | '(' expr ')'
/// A lone decimal literal ending in "..." (e.g. "0.41421356...") is a
/// truncated irrational: the enclosure is the literal +- one unit in the last
/// digit. Throws ParseError (with offset) on malformed text and
/// RationalInputError when the value is rational.
RealInput parse_input(std::string_view text);

/// Deterministic sample surd (a + b*sqrt(d))/c with |a|, |b|, c <= 20,
/// b != 0 and d in {2, 3, 5, 6, 7, 10}.
QuadraticSurd sample_surd(std::uint64_t seed, std::uint64_t index);
/// Same, additionally reduced into the open unit interval by subtracting
/// the floor.
QuadraticSurd sample_unit_surd(std::uint64_t seed, std::uint64_t index);

}  // namespace paritycf
