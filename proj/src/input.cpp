#include "paritycf/input.hpp"

#include <array>
#include <cctype>
#include <random>

namespace paritycf {

RealInput RealInput::surd(QuadraticSurd x) {
  if (x.is_rational()) throw RationalInputError("input " + x.str() + " is rational");
  RealInput r;
  r.exact_ = true;
  r.surd_ = std::move(x);
  return r;
}

RealInput RealInput::interval(Rational lo, Rational hi, std::string literal) {
  if (hi < lo) std::swap(lo, hi);
  RealInput r;
  r.exact_ = false;
  r.lo_ = std::move(lo);
  r.hi_ = std::move(hi);
  r.literal_ = std::move(literal);
  return r;
}

int RealInput::sign_affine(const BigInt& A, const BigInt& B) const {
  if (exact_) return paritycf::sign_affine(surd_, A, B);
  const int s_lo = (Rational(A) * lo_ + Rational(B)).sign();
  const int s_hi = (Rational(A) * hi_ + Rational(B)).sign();
  if (s_lo == s_hi && s_lo != 0) return s_lo;
  if (A == 0) return sgn(B);
  throw PrecisionExhausted("decimal input " + literal_ + " cannot decide the sign of " + A.get_str() + "*x + " +
                           B.get_str());
}

BigInt RealInput::floor() const {
  if (exact_) return surd_.floor();
  BigInt f;
  mpz_fdiv_q(f.get_mpz_t(), lo_.get().get_num_mpz_t(), lo_.get().get_den_mpz_t());
  if (Rational(f) == lo_ || hi_ >= Rational(BigInt(f + 1))) {
    throw PrecisionExhausted("decimal input " + literal_ + " does not determine its integer part");
  }
  return f;
}

double RealInput::approx() const {
  if (exact_) return surd_.approx();
  return ((lo_ + hi_) / Rational(2)).get().get_d();
}

std::string RealInput::str() const { return exact_ ? surd_.str() : literal_; }

namespace {

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  RealInput parse() {
    skip();
    if (auto lit = truncated_decimal()) return *lit;
    const QuadraticSurd v = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected character '" + std::string(1, s_[pos_]) + "'");
    return RealInput::surd(v);
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg + " at offset " + std::to_string(pos_), pos_); }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])) != 0) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  // A whole-input literal such as "-0.4142135..." denotes an enclosure.
  std::optional<RealInput> truncated_decimal() {
    std::string_view body = s_;
    while (!body.empty() && std::isspace(static_cast<unsigned char>(body.back())) != 0) body.remove_suffix(1);
    if (body.size() < 3 || body.substr(body.size() - 3) != "...") return std::nullopt;
    body.remove_suffix(3);
    std::size_t i = pos_;
    bool neg = false;
    if (i < body.size() && (body[i] == '-' || body[i] == '+')) neg = body[i++] == '-';
    std::string digits;
    std::size_t frac = 0;
    bool dot = false;
    for (; i < body.size(); ++i) {
      const char c = body[i];
      if (std::isdigit(static_cast<unsigned char>(c)) != 0) {
        digits += c;
        if (dot) ++frac;
      } else if (c == '.' && !dot) {
        dot = true;
      } else {
        pos_ = i;
        fail("malformed truncated decimal");
      }
    }
    if (digits.empty() || frac == 0) {
      pos_ = i;
      fail("truncated decimal needs at least one fractional digit");
    }
    BigInt scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac);
    BigInt n(digits, 10);
    if (neg) n = -n;
    const Rational v(n, scale);
    const Rational ulp(BigInt(1), scale);
    return RealInput::interval(v - ulp, v + ulp, std::string(s_.substr(0, body.size() + 3)));
  }

  QuadraticSurd combine(char op, const QuadraticSurd& u, const QuadraticSurd& v, std::size_t at) {
    try {
      switch (op) {
        case '+': return u + v;
        case '-': return u - v;
        case '*': return u * v;
        default:
          if (v.sign() == 0) {
            pos_ = at;
            fail("division by zero");
          }
          return u / v;
      }
    } catch (const RadicandMismatch& e) {
      pos_ = at;
      fail(std::string("not a quadratic surd (") + e.what() + ")");
    }
  }

  QuadraticSurd expr() {
    QuadraticSurd v = term();
    for (;;) {
      skip();
      const std::size_t at = pos_;
      if (accept('+')) {
        v = combine('+', v, term(), at);
      } else if (accept('-')) {
        v = combine('-', v, term(), at);
      } else {
        return v;
      }
    }
  }

  QuadraticSurd term() {
    QuadraticSurd v = unary();
    for (;;) {
      skip();
      const std::size_t at = pos_;
      if (accept('*')) {
        v = combine('*', v, unary(), at);
      } else if (accept('/')) {
        v = combine('/', v, unary(), at);
      } else {
        return v;
      }
    }
  }

  QuadraticSurd unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return primary();
  }

  BigInt integer_literal() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])) != 0) ++pos_;
    if (start == pos_) fail("expected an integer");
    return BigInt(std::string(s_.substr(start, pos_ - start)), 10);
  }

  QuadraticSurd primary() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      QuadraticSurd v = expr();
      expect(')');
      return v;
    }
    if (s_.substr(pos_, 4) == "sqrt") {
      pos_ += 4;
      expect('(');
      const std::size_t at = pos_;
      const BigInt d = integer_literal();
      expect(')');
      if (d == 0) return QuadraticSurd();
      try {
        return QuadraticSurd(0, 1, 1, d);
      } catch (const std::invalid_argument&) {
        pos_ = at;
        fail("bad radicand");
      }
    }
    if (std::isdigit(static_cast<unsigned char>(c)) != 0 || c == '.') {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])) != 0) ++pos_;
      BigInt n(start == pos_ ? std::string("0") : std::string(s_.substr(start, pos_ - start)));
      if (pos_ < s_.size() && s_[pos_] == '.') {
        ++pos_;
        const std::size_t fs = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])) != 0) ++pos_;
        if (fs == pos_) fail("expected digits after '.'");
        const std::size_t frac = pos_ - fs;
        BigInt scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac);
        n = n * scale + BigInt(std::string(s_.substr(fs, frac)), 10);
        return QuadraticSurd(Rational(n, scale));
      }
      return QuadraticSurd(Rational(n));
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

RealInput parse_input(std::string_view text) { return Parser(text).parse(); }

QuadraticSurd sample_surd(std::uint64_t seed, std::uint64_t index) {
  static constexpr std::array<int, 6> kRadicands{2, 3, 5, 6, 7, 10};
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  std::mt19937_64 rng(seq);
  std::uniform_int_distribution<int> a_dist(-20, 20);
  std::uniform_int_distribution<int> b_dist(1, 20);
  std::uniform_int_distribution<int> c_dist(1, 20);
  std::uniform_int_distribution<std::size_t> d_dist(0, kRadicands.size() - 1);
  std::bernoulli_distribution neg(0.5);
  const int a = a_dist(rng);
  const int b = neg(rng) ? -b_dist(rng) : b_dist(rng);
  const int c = c_dist(rng);
  const int d = kRadicands[d_dist(rng)];
  return QuadraticSurd(a, b, c, d);
}

QuadraticSurd sample_unit_surd(std::uint64_t seed, std::uint64_t index) {
  const QuadraticSurd x = sample_surd(seed, index);
  return x - QuadraticSurd::integer(x.floor());
}

}  // namespace paritycf
