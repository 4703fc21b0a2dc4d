#pragma once

// Regular continued fractions x = [a0; a1, a2, ...] with lazily computed
// partial quotients, principal convergents p_n/q_n and intermediate
// convergents p_{n,k}/q_{n,k}.

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "paritycf/input.hpp"

namespace paritycf {

struct Convergent {
  long n = 0;
  BigInt p, q;
};

struct Intermediate {
  long n = 0;
  BigInt k;
  BigInt p, q;
};

/// Lazy expansion. Surd inputs expand forever and report their period;
/// enclosure inputs expand while every term is certified by the enclosure.
/// Not thread-safe (memoizes); copy it to share across threads.
class RcfStream {
 public:
  explicit RcfStream(const RealInput& x);

  const RealInput& source() const { return source_; }

  /// a_i. Throws PrecisionExhausted when an enclosure cannot certify it.
  const BigInt& term(std::size_t i);
  /// Whether a_i can be produced (always true for surds).
  bool has_term(std::size_t i);

  /// p_n/q_n for n >= -2 (p_{-2}/q_{-2} = 0/1, p_{-1}/q_{-1} = 1/0).
  Convergent convergent(long n);

  /// (preperiod, period) with a_i = a_{i + period} for i >= preperiod.
  /// Only for surd inputs; nullopt otherwise.
  std::optional<std::pair<std::size_t, std::size_t>> period();

 private:
  bool extend();  // computes one more term; false if uncertified

  RealInput source_;
  std::vector<BigInt> terms_;
  std::vector<BigInt> p_{0, 1}, q_{1, 0};  // p_{-2}, p_{-1}, p_0, ...

  // Surd state x_i = (P + sqrt(D))/Q.
  BigInt P_, Q_, D_, sqrtD_;
  std::map<std::pair<BigInt, BigInt>, std::size_t> seen_;
  std::optional<std::pair<std::size_t, std::size_t>> period_;

  // Enclosure of the current complete quotient.
  Rational lo_, hi_;
  bool exhausted_ = false;
};

/// p_n/q_n for n = -1 .. n_max.
std::vector<Convergent> convergents(RcfStream& s, long n_max);
/// All (n, k) with 1 <= n <= n_max and 1 <= k < a_n, ordered by (n, k).
std::vector<Intermediate> intermediates(RcfStream& s, long n_max);
Intermediate intermediate(RcfStream& s, long n, const BigInt& k);

}  // namespace paritycf
