#include "paritycf/exact.hpp"

#include <stdexcept>

namespace paritycf {

namespace {

int sgn_int(const BigInt& x) { return sgn(x); }

// Sign of a + b*sqrt(d), d > 0 not a square (or b = 0).
int sign_of(const BigInt& a, const BigInt& b, const BigInt& d) {
  const int sa = sgn_int(a);
  const int sb = sgn_int(b);
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  const int c = cmp(BigInt(a * a), BigInt(b * b * d));
  if (c > 0) return sa;
  if (c < 0) return sb;
  return 0;
}

BigInt isqrt(const BigInt& n) {
  BigInt r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

BigInt fdiv(const BigInt& n, const BigInt& d) {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  return q;
}

const BigInt& common_radicand(const QuadraticSurd& u, const QuadraticSurd& v) {
  if (u.is_rational()) return v.d();
  if (v.is_rational()) return u.d();
  if (u.d() != v.d()) {
    throw RadicandMismatch("surds over sqrt(" + u.d().get_str() + ") and sqrt(" + v.d().get_str() +
                           ") cannot be combined");
  }
  return u.d();
}

}  // namespace

Sym third(Sym a, Sym b) {
  if (a == b) throw std::invalid_argument("third: symbols must differ");
  return static_cast<Sym>(3 - static_cast<int>(a) - static_cast<int>(b));
}

std::string_view to_string(Sym s) {
  switch (s) {
    case Sym::Zero: return "0";
    case Sym::One: return "1";
    case Sym::Inf: return "inf";
  }
  return "?";
}

std::optional<Sym> sym_from_string(std::string_view s) {
  if (s == "0") return Sym::Zero;
  if (s == "1") return Sym::One;
  if (s == "inf" || s == "∞") return Sym::Inf;
  return std::nullopt;
}

// ---------------------------------------------------------------- Rational

Rational::Rational(const BigInt& num, const BigInt& den) : v_(num, den) {
  if (den == 0) throw std::domain_error("Rational: zero denominator");
  v_.canonicalize();
}

Rational::Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

Rational operator/(const Rational& a, const Rational& b) {
  if (b.sign() == 0) throw std::domain_error("Rational: division by zero");
  return Rational(mpq_class(a.v_ / b.v_));
}

std::string Rational::str() const {
  if (v_.get_den() == 1) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

ParityClass parity_of(const Rational& r) {
  const bool p_odd = mpz_odd_p(r.get().get_num_mpz_t()) != 0;
  const bool q_odd = mpz_odd_p(r.get().get_den_mpz_t()) != 0;
  if (!p_odd) return Sym::Zero;  // q is then odd
  return q_odd ? Sym::One : Sym::Inf;
}

// ----------------------------------------------------------- QuadraticSurd

QuadraticSurd::QuadraticSurd(const BigInt& a, const BigInt& b, const BigInt& c, const BigInt& d)
    : a_(a), b_(b), c_(c), d_(d) {
  if (c_ == 0) throw std::invalid_argument("QuadraticSurd: zero denominator");
  if (d_ < 0) throw std::invalid_argument("QuadraticSurd: negative radicand");
  if (b_ != 0) {
    if (d_ == 0) {
      b_ = 0;
    } else {
      // Small primes are split off completely; whatever remains has only
      // prime factors above the trial bound and is reduced when it is a square.
      BigInt f = 1, kept = 1, rest = d_;
      for (unsigned long i = 2; i <= 1000000UL; ++i) {
        if (BigInt(i) * i > rest) break;
        bool odd = false;
        while (mpz_divisible_ui_p(rest.get_mpz_t(), i) != 0) {
          rest /= i;
          if (odd) f *= i;
          odd = !odd;
        }
        if (odd) kept *= i;
      }
      if (mpz_perfect_square_p(rest.get_mpz_t()) != 0) {
        f *= isqrt(rest);
        rest = 1;
      }
      d_ = kept * rest;
      b_ *= f;
      if (d_ == 1) {
        a_ += b_;
        b_ = 0;
      }
    }
  }
  normalize();
}

QuadraticSurd::QuadraticSurd(const Rational& r) : a_(r.num()), b_(0), c_(r.den()), d_(0) {}

QuadraticSurd::QuadraticSurd(Raw, BigInt a, BigInt b, BigInt c, BigInt d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
  normalize();
}

void QuadraticSurd::normalize() {
  if (c_ == 0) throw std::domain_error("QuadraticSurd: zero denominator");
  if (c_ < 0) {
    a_ = -a_;
    b_ = -b_;
    c_ = -c_;
  }
  if (b_ == 0) d_ = 0;
  BigInt g;
  mpz_gcd(g.get_mpz_t(), a_.get_mpz_t(), b_.get_mpz_t());
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c_.get_mpz_t());
  if (g != 1) {
    mpz_divexact(a_.get_mpz_t(), a_.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(b_.get_mpz_t(), b_.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(c_.get_mpz_t(), c_.get_mpz_t(), g.get_mpz_t());
  }
}

Rational QuadraticSurd::to_rational() const {
  if (!is_rational()) throw std::logic_error("QuadraticSurd::to_rational on irrational value " + str());
  return Rational(a_, c_);
}

int QuadraticSurd::sign() const { return sign_of(a_, b_, d_); }

BigInt QuadraticSurd::floor() const {
  if (b_ == 0) return fdiv(a_, c_);
  const BigInt s = isqrt(BigInt(b_ * b_ * d_));  // floor(|b| sqrt d)
  if (b_ > 0) return fdiv(BigInt(a_ + s), c_);
  return fdiv(BigInt(a_ - s - 1), c_);
}

BigInt QuadraticSurd::ceil() const {
  BigInt f = floor();
  if (b_ == 0 && f * c_ == a_) return f;
  return f + 1;
}

double QuadraticSurd::approx() const {
  mpf_class x(a_, 256);
  if (b_ != 0) {
    mpf_class r(d_, 256);
    r = sqrt(r);
    x += mpf_class(b_, 256) * r;
  }
  x /= mpf_class(c_, 256);
  return x.get_d();
}

QuadraticSurd QuadraticSurd::conjugate() const { return QuadraticSurd(Raw{}, a_, -b_, c_, d_); }

QuadraticSurd QuadraticSurd::reciprocal() const {
  BigInt n = a_ * a_ - b_ * b_ * d_;
  if (n == 0) throw std::domain_error("QuadraticSurd: reciprocal of zero");
  return QuadraticSurd(Raw{}, c_ * a_, -c_ * b_, std::move(n), d_);
}

QuadraticSurd QuadraticSurd::operator-() const { return QuadraticSurd(Raw{}, -a_, -b_, c_, d_); }

QuadraticSurd operator+(const QuadraticSurd& u, const QuadraticSurd& v) {
  const BigInt& d = common_radicand(u, v);
  return QuadraticSurd(QuadraticSurd::Raw{}, u.a_ * v.c_ + v.a_ * u.c_, u.b_ * v.c_ + v.b_ * u.c_, u.c_ * v.c_, d);
}

QuadraticSurd operator-(const QuadraticSurd& u, const QuadraticSurd& v) { return u + (-v); }

QuadraticSurd operator*(const QuadraticSurd& u, const QuadraticSurd& v) {
  const BigInt& d = common_radicand(u, v);
  return QuadraticSurd(QuadraticSurd::Raw{}, u.a_ * v.a_ + u.b_ * v.b_ * d, u.a_ * v.b_ + u.b_ * v.a_, u.c_ * v.c_,
                       d);
}

QuadraticSurd operator/(const QuadraticSurd& u, const QuadraticSurd& v) {
  common_radicand(u, v);
  return u * v.reciprocal();
}

std::strong_ordering operator<=>(const QuadraticSurd& u, const QuadraticSurd& v) {
  const int s = (u - v).sign();
  return s < 0 ? std::strong_ordering::less : s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

std::string QuadraticSurd::str() const {
  if (b_ == 0) return Rational(a_, c_).str();
  std::string s = "(" + a_.get_str();
  s += b_ < 0 ? "-" : "+";
  s += BigInt(::abs(b_)).get_str() + "*sqrt(" + d_.get_str() + "))/" + c_.get_str();
  return s;
}

int surd_sign(const QuadraticSurd& s) { return s.sign(); }

std::strong_ordering surd_cmp_abs(const QuadraticSurd& u, const QuadraticSurd& v) {
  common_radicand(u, v);
  // sign(u^2 - v^2) = sign(|u| - |v|) since |u| + |v| >= 0.
  const QuadraticSurd diff = u * u - v * v;
  const int s = diff.sign();
  return s < 0 ? std::strong_ordering::less : s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

BigInt floor_surd(const QuadraticSurd& s) { return s.floor(); }

int sign_affine(const QuadraticSurd& x, const BigInt& A, const BigInt& B) {
  // A (a + b sqrt d)/c + B = (A a + B c + A b sqrt d)/c
  return sign_of(A * x.a() + B * x.c(), A * x.b(), x.d());
}

// ------------------------------------------------------------ ExtendedReal

const QuadraticSurd& ExtendedReal::value() const {
  if (!v_) throw std::logic_error("ExtendedReal::value on the point at infinity");
  return *v_;
}

std::optional<Rational> ExtendedReal::as_rational() const {
  if (!v_ || !v_->is_rational()) return std::nullopt;
  return v_->to_rational();
}

std::string ExtendedReal::str() const { return v_ ? v_->str() : std::string("inf"); }

ExtendedReal symbol_point(Sym s) {
  switch (s) {
    case Sym::Zero: return Rational(0);
    case Sym::One: return Rational(1);
    case Sym::Inf: return ExtendedReal::infinity();
  }
  return ExtendedReal::infinity();
}

std::optional<Sym> point_symbol(const ExtendedReal& x) {
  if (x.is_infinite()) return Sym::Inf;
  const auto r = x.as_rational();
  if (!r) return std::nullopt;
  if (*r == Rational(0)) return Sym::Zero;
  if (*r == Rational(1)) return Sym::One;
  return std::nullopt;
}

// -------------------------------------------------------------------- Mat2

Mat2::Mat2(BigInt m11, BigInt m12, BigInt m21, BigInt m22)
    : e_{std::move(m11), std::move(m12), std::move(m21), std::move(m22)} {
  const BigInt det = e_[0] * e_[3] - e_[1] * e_[2];
  if (det == 1) {
    det_ = 1;
  } else if (det == -1) {
    det_ = -1;
  } else {
    throw std::invalid_argument("Mat2: determinant " + det.get_str() + " is not +-1");
  }
  canonicalize();
}

Mat2::Mat2(Raw, BigInt m11, BigInt m12, BigInt m21, BigInt m22, int det)
    : e_{std::move(m11), std::move(m12), std::move(m21), std::move(m22)}, det_(det) {
  canonicalize();
}

void Mat2::canonicalize() {
  if (e_[2] < 0 || (e_[2] == 0 && e_[3] < 0)) {
    for (auto& x : e_) x = -x;
  }
}

Mat2 Mat2::inverse() const { return Mat2(Raw{}, e_[3], -e_[1], -e_[2], e_[0], det_); }

Mat2 operator*(const Mat2& x, const Mat2& y) {
  return Mat2(Mat2::Raw{}, x.e_[0] * y.e_[0] + x.e_[1] * y.e_[2], x.e_[0] * y.e_[1] + x.e_[1] * y.e_[3],
              x.e_[2] * y.e_[0] + x.e_[3] * y.e_[2], x.e_[2] * y.e_[1] + x.e_[3] * y.e_[3], x.det_ * y.det_);
}

std::string Mat2::str() const {
  return "[[" + e_[0].get_str() + "," + e_[1].get_str() + "],[" + e_[2].get_str() + "," + e_[3].get_str() + "]]";
}

ExtendedReal moebius_apply(const Mat2& m, const ExtendedReal& x) {
  if (x.is_infinite()) {
    if (m.m21() == 0) return ExtendedReal::infinity();
    return Rational(m.m11(), m.m21());
  }
  const QuadraticSurd& s = x.value();
  // (m11 s + m12)/(m21 s + m22) with s = (a + b sqrt d)/c
  const BigInt n_a = m.m11() * s.a() + m.m12() * s.c();
  const BigInt n_b = m.m11() * s.b();
  const BigInt d_a = m.m21() * s.a() + m.m22() * s.c();
  const BigInt d_b = m.m21() * s.b();
  if (d_b == 0) {
    if (d_a == 0) return ExtendedReal::infinity();
    return QuadraticSurd(n_a, n_b, d_a, s.is_rational() ? BigInt(0) : s.d());
  }
  // (n_a + n_b r)(d_a - d_b r) / (d_a^2 - d_b^2 d)
  const BigInt& d = s.d();
  return QuadraticSurd(n_a * d_a - n_b * d_b * d, n_b * d_a - n_a * d_b, d_a * d_a - d_b * d_b * d, d);
}

std::optional<Rational> moebius_apply_rational(const Mat2& m, const std::optional<Rational>& x) {
  if (!x) {
    if (m.m21() == 0) return std::nullopt;
    return Rational(m.m11(), m.m21());
  }
  const BigInt p = x->num();
  const BigInt q = x->den();
  const BigInt den = m.m21() * p + m.m22() * q;
  if (den == 0) return std::nullopt;
  return Rational(BigInt(m.m11() * p + m.m12() * q), den);
}

std::optional<Rational> apply_to_cusp(const Mat2& m, Sym s) {
  BigInt num;
  BigInt den;
  switch (s) {
    case Sym::Zero:
      num = m.m12();
      den = m.m22();
      break;
    case Sym::One:
      num = m.m11() + m.m12();
      den = m.m21() + m.m22();
      break;
    case Sym::Inf:
      num = m.m11();
      den = m.m21();
      break;
  }
  if (den == 0) return std::nullopt;
  return Rational(num, den);
}

const Mat2& reflection(Sym s) {
  static const Mat2 h0(-1, 2, 0, 1);
  static const Mat2 h1(-1, 0, 0, 1);
  static const Mat2 hinf(1, 0, 2, -1);
  switch (s) {
    case Sym::Zero: return h0;
    case Sym::One: return h1;
    case Sym::Inf: return hinf;
  }
  return h1;
}

const Mat2& matrix_L() {
  static const Mat2 m(1, 1, 0, 1);
  return m;
}
const Mat2& matrix_L_inv() {
  static const Mat2 m(1, -1, 0, 1);
  return m;
}
const Mat2& matrix_R() {
  static const Mat2 m(1, 0, 1, 1);
  return m;
}

// ------------------------------------------------------------------ PermS3

PermS3::PermS3(Sym image_of_zero, Sym image_of_one, Sym image_of_inf)
    : image_{image_of_zero, image_of_one, image_of_inf} {
  if (image_of_zero == image_of_one || image_of_zero == image_of_inf || image_of_one == image_of_inf) {
    throw std::invalid_argument("PermS3: images must be distinct");
  }
}

PermS3 PermS3::sending(Sym a, Sym a_image, Sym b, Sym b_image) {
  std::array<Sym, 3> img{};
  img[static_cast<int>(a)] = a_image;
  img[static_cast<int>(b)] = b_image;
  img[static_cast<int>(third(a, b))] = third(a_image, b_image);
  return PermS3(img[0], img[1], img[2]);
}

PermS3 PermS3::after(const PermS3& inner) const {
  return PermS3((*this)(inner(Sym::Zero)), (*this)(inner(Sym::One)), (*this)(inner(Sym::Inf)));
}

PermS3 PermS3::inverse() const {
  std::array<Sym, 3> inv{};
  for (Sym s : kAllSyms) inv[static_cast<int>((*this)(s))] = s;
  return PermS3(inv[0], inv[1], inv[2]);
}

std::string PermS3::str() const {
  std::string s;
  for (Sym x : kAllSyms) {
    if (!s.empty()) s += ",";
    s += std::string(to_string(x)) + "->" + std::string(to_string((*this)(x)));
  }
  return s;
}

// ------------------------------------------------------------------- Gamma

namespace {

struct GammaTable {
  std::array<Mat2, 6> matrices;
  std::array<PermS3, 6> perms;

  GammaTable() {
    const Mat2 j(0, 1, 1, 0);
    const Mat2 k(-1, 1, 0, 1);
    matrices = {Mat2::identity(), j, k, j * k, k * j, j * k * j};
    for (std::size_t i = 0; i < 6; ++i) {
      std::array<Sym, 3> img{};
      for (Sym s : kAllSyms) {
        const auto sym = point_symbol(moebius_apply(matrices[i], symbol_point(s)));
        img[static_cast<int>(s)] = *sym;
      }
      perms[i] = PermS3(img[0], img[1], img[2]);
    }
  }
};

const GammaTable& gamma_table() {
  static const GammaTable t;
  return t;
}

}  // namespace

const Mat2& gamma_matrix(Gamma g) { return gamma_table().matrices[static_cast<int>(g)]; }

std::string_view to_string(Gamma g) {
  switch (g) {
    case Gamma::I: return "I";
    case Gamma::J: return "J";
    case Gamma::K: return "K";
    case Gamma::JK: return "JK";
    case Gamma::KJ: return "KJ";
    case Gamma::JKJ: return "JKJ";
  }
  return "?";
}

std::optional<Gamma> gamma_of(const Mat2& m) {
  for (Gamma g : kAllGamma) {
    if (gamma_matrix(g) == m) return g;
  }
  return std::nullopt;
}

PermS3 perm_of_gamma(const Mat2& s) {
  if (!gamma_of(s)) throw std::invalid_argument("perm_of_gamma: " + s.str() + " is not a symmetry of the triangle");
  std::array<Sym, 3> img{};
  for (Sym x : kAllSyms) img[static_cast<int>(x)] = *point_symbol(moebius_apply(s, symbol_point(x)));
  return PermS3(img[0], img[1], img[2]);
}

PermS3 gamma_perm(Gamma g) { return gamma_table().perms[static_cast<int>(g)]; }

Gamma gamma_of_perm(const PermS3& p) {
  for (Gamma g : kAllGamma) {
    if (gamma_perm(g) == p) return g;
  }
  throw std::logic_error("gamma_of_perm: unreachable");
}

Gamma gamma_mul(Gamma x, Gamma y) { return gamma_of_perm(gamma_perm(x).after(gamma_perm(y))); }

}  // namespace paritycf
