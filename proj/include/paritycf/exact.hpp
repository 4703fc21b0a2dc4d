#pragma once

// Exact arithmetic: rationals, real quadratic surds (a + b*sqrt(d))/c,
// 2x2 integer matrices modulo sign (PGL2(Z)) acting on the boundary
// R u {inf}, and the symmetric group on the three cusps {0, 1, inf}.

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "paritycf/errors.hpp"

namespace paritycf {

using BigInt = mpz_class;

/// The three cusps of the ideal triangle 0, 1, inf. The same labels name the
/// parity classes of rationals (even/odd, odd/odd, odd/even) and the letters
/// of Delta-expressions.
enum class Sym : std::uint8_t { Zero = 0, One = 1, Inf = 2 };
using ParityClass = Sym;
using DeltaSymbol = Sym;

inline constexpr std::array<Sym, 3> kAllSyms{Sym::Zero, Sym::One, Sym::Inf};

/// The unique symbol different from both arguments. Requires a != b.
Sym third(Sym a, Sym b);
std::string_view to_string(Sym s);
std::optional<Sym> sym_from_string(std::string_view s);

class Rational {
 public:
  Rational() = default;
  Rational(long n) : v_(n) {}  // NOLINT(google-explicit-constructor)
  explicit Rational(const BigInt& n) : v_(n) {}
  Rational(const BigInt& num, const BigInt& den);
  explicit Rational(mpq_class v);

  BigInt num() const { return v_.get_num(); }
  BigInt den() const { return v_.get_den(); }
  const mpq_class& get() const { return v_; }
  int sign() const { return sgn(v_); }

  /// "p/q", or "p" when q == 1.
  std::string str() const;

  friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ + b.v_)); }
  friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ - b.v_)); }
  friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ * b.v_)); }
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational operator-() const { return Rational(mpq_class(-v_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  }

 private:
  mpq_class v_;
};

/// Parity class of a rational in lowest terms; uses |p| mod 2.
ParityClass parity_of(const Rational& r);

/// (a + b*sqrt(d))/c with gcd(a, b, c) = 1 and c > 0. When b = 0 the value
/// is rational and d is stored as 0. When b != 0, d > 1 is not a square.
class QuadraticSurd {
 public:
  QuadraticSurd() : a_(0), b_(0), c_(1), d_(0) {}
  /// Reduces d by its square factors (trial division up to 10^6 plus a
  /// final square test). Throws std::invalid_argument for c = 0 or d < 0.
  QuadraticSurd(const BigInt& a, const BigInt& b, const BigInt& c, const BigInt& d);
  explicit QuadraticSurd(const Rational& r);
  static QuadraticSurd integer(const BigInt& n) { return QuadraticSurd(Rational(n)); }

  const BigInt& a() const { return a_; }
  const BigInt& b() const { return b_; }
  const BigInt& c() const { return c_; }
  const BigInt& d() const { return d_; }

  bool is_rational() const { return b_ == 0; }
  /// Throws std::logic_error when irrational.
  Rational to_rational() const;

  int sign() const;
  BigInt floor() const;
  BigInt ceil() const;
  double approx() const;
  QuadraticSurd conjugate() const;
  QuadraticSurd reciprocal() const;  // throws std::domain_error on zero
  QuadraticSurd abs() const { return sign() < 0 ? -*this : *this; }

  /// "(a+b*sqrt(d))/c" for irrationals, the rational form otherwise.
  std::string str() const;

  QuadraticSurd operator-() const;
  friend QuadraticSurd operator+(const QuadraticSurd& u, const QuadraticSurd& v);
  friend QuadraticSurd operator-(const QuadraticSurd& u, const QuadraticSurd& v);
  friend QuadraticSurd operator*(const QuadraticSurd& u, const QuadraticSurd& v);
  friend QuadraticSurd operator/(const QuadraticSurd& u, const QuadraticSurd& v);

  friend bool operator==(const QuadraticSurd& u, const QuadraticSurd& v) = default;
  friend std::strong_ordering operator<=>(const QuadraticSurd& u, const QuadraticSurd& v);

 private:
  struct Raw {};
  QuadraticSurd(Raw, BigInt a, BigInt b, BigInt c, BigInt d);
  void normalize();

  BigInt a_, b_, c_, d_;
};

/// Exact sign of (a + b*sqrt(d))/c.
int surd_sign(const QuadraticSurd& s);
/// Compares |u| with |v|. Throws RadicandMismatch when both are irrational
/// over different radicands.
std::strong_ordering surd_cmp_abs(const QuadraticSurd& u, const QuadraticSurd& v);
/// The integer n with n <= s < n + 1, by integer bracketing only.
BigInt floor_surd(const QuadraticSurd& s);

/// Sign of A*x + B for a surd x.
int sign_affine(const QuadraticSurd& x, const BigInt& A, const BigInt& B);

/// A point of R u {inf}; +inf and -inf are the same point.
class ExtendedReal {
 public:
  ExtendedReal() = default;
  ExtendedReal(QuadraticSurd v) : v_(std::move(v)) {}  // NOLINT
  ExtendedReal(const Rational& r) : v_(QuadraticSurd(r)) {}  // NOLINT
  static ExtendedReal infinity() { return ExtendedReal(Tag{}); }

  bool is_infinite() const { return !v_.has_value(); }
  const QuadraticSurd& value() const;
  std::optional<Rational> as_rational() const;
  std::string str() const;

  friend bool operator==(const ExtendedReal& x, const ExtendedReal& y) = default;

 private:
  struct Tag {};
  explicit ExtendedReal(Tag) {}
  std::optional<QuadraticSurd> v_;
};

ExtendedReal symbol_point(Sym s);
std::optional<Sym> point_symbol(const ExtendedReal& x);

/// Element of PGL2(Z): an integer matrix with determinant +-1 taken modulo
/// sign. Stored canonically: the first nonzero entry of the bottom row is
/// positive.
class Mat2 {
 public:
  Mat2() : Mat2(1, 0, 0, 1) {}
  /// Throws std::invalid_argument unless |det| = 1.
  Mat2(BigInt m11, BigInt m12, BigInt m21, BigInt m22);
  static Mat2 identity() { return Mat2(); }

  const BigInt& m11() const { return e_[0]; }
  const BigInt& m12() const { return e_[1]; }
  const BigInt& m21() const { return e_[2]; }
  const BigInt& m22() const { return e_[3]; }
  int det() const { return det_; }

  Mat2 inverse() const;
  friend Mat2 operator*(const Mat2& x, const Mat2& y);
  friend bool operator==(const Mat2& x, const Mat2& y) { return x.e_ == y.e_; }

  /// "[[m11,m12],[m21,m22]]"
  std::string str() const;

 private:
  struct Raw {};
  Mat2(Raw, BigInt m11, BigInt m12, BigInt m21, BigInt m22, int det);
  void canonicalize();

  std::array<BigInt, 4> e_;
  int det_ = 1;
};

/// Image of x under z -> (m11 z + m12)/(m21 z + m22). For det = -1 the
/// action on the boundary is the same formula.
ExtendedReal moebius_apply(const Mat2& m, const ExtendedReal& x);
/// Rational images, used for evaluating words on cusps. nullopt means inf.
std::optional<Rational> moebius_apply_rational(const Mat2& m, const std::optional<Rational>& x);
/// m applied to the cusp s; nullopt means inf.
std::optional<Rational> apply_to_cusp(const Mat2& m, Sym s);

/// Reflection H_s fixing the two cusps other than s.
const Mat2& reflection(Sym s);
const Mat2& matrix_L();
const Mat2& matrix_L_inv();
const Mat2& matrix_R();

/// A bijection of {0, 1, inf}.
class PermS3 {
 public:
  PermS3() : image_{Sym::Zero, Sym::One, Sym::Inf} {}
  /// Throws std::invalid_argument unless the images are distinct.
  PermS3(Sym image_of_zero, Sym image_of_one, Sym image_of_inf);
  static PermS3 identity() { return PermS3(); }
  /// The permutation sending a -> a_image and b -> b_image (a != b).
  static PermS3 sending(Sym a, Sym a_image, Sym b, Sym b_image);

  Sym operator()(Sym s) const { return image_[static_cast<int>(s)]; }
  /// (*this)(inner(s)).
  PermS3 after(const PermS3& inner) const;
  PermS3 inverse() const;
  std::string str() const;

  friend bool operator==(const PermS3& x, const PermS3& y) = default;

 private:
  std::array<Sym, 3> image_;
};

/// The symmetry group of the ideal triangle with vertices 0, 1, inf.
enum class Gamma : std::uint8_t { I, J, K, JK, KJ, JKJ };
inline constexpr std::array<Gamma, 6> kAllGamma{Gamma::I, Gamma::J, Gamma::K, Gamma::JK, Gamma::KJ, Gamma::JKJ};

const Mat2& gamma_matrix(Gamma g);
std::string_view to_string(Gamma g);
std::optional<Gamma> gamma_of(const Mat2& m);
/// The permutation s -> S . s. Throws std::invalid_argument when S is not
/// one of the six symmetries.
PermS3 perm_of_gamma(const Mat2& s);
PermS3 gamma_perm(Gamma g);
Gamma gamma_of_perm(const PermS3& p);
Gamma gamma_mul(Gamma x, Gamma y);

}  // namespace paritycf
