#include "paritycf/rcf.hpp"

#include <stdexcept>

namespace paritycf {

namespace {

BigInt fdiv(const BigInt& n, const BigInt& d) {
  BigInt r;
  mpz_fdiv_q(r.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  return r;
}

BigInt rational_floor(const Rational& r) { return fdiv(r.num(), r.den()); }

}  // namespace

RcfStream::RcfStream(const RealInput& x) : source_(x) {
  if (x.is_surd()) {
    const QuadraticSurd& s = x.value();
    // (a + b sqrt d)/c = (P + sqrt D)/Q with D = b^2 d.
    D_ = s.b() * s.b() * s.d();
    if (s.b() > 0) {
      P_ = s.a();
      Q_ = s.c();
    } else {
      P_ = -s.a();
      Q_ = -s.c();
    }
    const BigInt rem = D_ - P_ * P_;
    if (mpz_divisible_p(rem.get_mpz_t(), Q_.get_mpz_t()) == 0) {
      const BigInt aq = ::abs(Q_);
      P_ *= aq;
      D_ *= Q_ * Q_;
      Q_ *= aq;
    }
    mpz_sqrt(sqrtD_.get_mpz_t(), D_.get_mpz_t());
  } else {
    lo_ = x.lo();
    hi_ = x.hi();
  }
}

bool RcfStream::extend() {
  const std::size_t i = terms_.size();
  BigInt a;
  if (source_.is_surd()) {
    if (!period_) {
      auto [it, fresh] = seen_.try_emplace({P_, Q_}, i);
      if (!fresh) period_ = std::make_pair(it->second, i - it->second);
    }
    if (Q_ > 0) {
      a = fdiv(BigInt(P_ + sqrtD_), Q_);
    } else {
      a = fdiv(BigInt(-P_ - sqrtD_ - 1), BigInt(-Q_));
    }
    P_ = a * Q_ - P_;
    Q_ = (D_ - P_ * P_) / Q_;
  } else {
    if (exhausted_) return false;
    const BigInt f = rational_floor(lo_);
    if (Rational(f) == lo_ || hi_ >= Rational(BigInt(f + 1))) {
      exhausted_ = true;
      return false;
    }
    a = f;
    const Rational one(1);
    Rational nlo = one / (hi_ - Rational(f));
    Rational nhi = one / (lo_ - Rational(f));
    lo_ = std::move(nlo);
    hi_ = std::move(nhi);
  }
  if (i > 0 && a < 1) throw std::logic_error("RcfStream: non-positive partial quotient");
  const std::size_t k = p_.size();
  p_.push_back(a * p_[k - 1] + p_[k - 2]);
  q_.push_back(a * q_[k - 1] + q_[k - 2]);
  terms_.push_back(std::move(a));
  return true;
}

bool RcfStream::has_term(std::size_t i) {
  while (terms_.size() <= i) {
    if (!extend()) return false;
  }
  return true;
}

const BigInt& RcfStream::term(std::size_t i) {
  if (!has_term(i)) {
    throw PrecisionExhausted("decimal input " + source_.str() + " certifies only " + std::to_string(terms_.size()) +
                             " partial quotients");
  }
  return terms_[i];
}

Convergent RcfStream::convergent(long n) {
  if (n < -2) throw std::out_of_range("convergent index below -2");
  if (n >= 0) term(static_cast<std::size_t>(n));
  const auto idx = static_cast<std::size_t>(n + 2);
  return Convergent{n, p_[idx], q_[idx]};
}

std::optional<std::pair<std::size_t, std::size_t>> RcfStream::period() {
  if (!source_.is_surd()) return std::nullopt;
  while (!period_) extend();
  return period_;
}

std::vector<Convergent> convergents(RcfStream& s, long n_max) {
  std::vector<Convergent> out;
  for (long n = -1; n <= n_max; ++n) out.push_back(s.convergent(n));
  return out;
}

Intermediate intermediate(RcfStream& s, long n, const BigInt& k) {
  const Convergent c1 = s.convergent(n - 1);
  const Convergent c2 = s.convergent(n - 2);
  return Intermediate{n, k, k * c1.p + c2.p, k * c1.q + c2.q};
}

std::vector<Intermediate> intermediates(RcfStream& s, long n_max) {
  std::vector<Intermediate> out;
  for (long n = 1; n <= n_max; ++n) {
    const BigInt a = s.term(static_cast<std::size_t>(n));
    for (BigInt k = 1; k < a; ++k) out.push_back(intermediate(s, n, k));
  }
  return out;
}

}  // namespace paritycf
