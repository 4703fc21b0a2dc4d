#pragma once

// Ground truth straight from the definitions: minimality scans over all
// denominators, a quadratic-time definitional scan, and the lattice /
// parallelogram characterizations.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "paritycf/input.hpp"
#include "paritycf/parity_best.hpp"

namespace paritycf {

/// x with fast exact affine sign tests. Coordinates are 64-bit; the oracle
/// accepts |x| < 2^20 and denominators up to kOracleMaxDenominator.
class Target {
 public:
  explicit Target(const RealInput& x);

  const RealInput& input() const { return x_; }
  /// sign(A*x + B)
  int sign(std::int64_t A, std::int64_t B) const;
  /// floor(j*x)
  std::int64_t floor_times(std::int64_t j) const;
  /// sign(|q1 x - p1| - |q2 x - p2|)
  int cmp_abs_err(std::int64_t p1, std::int64_t q1, std::int64_t p2, std::int64_t q2) const;

 private:
  RealInput x_;
  bool fast_ = false;
  std::int64_t a_ = 0, b_ = 0, c_ = 1, d_ = 0;
  double approx_ = 0;
};

inline constexpr std::int64_t kOracleMaxDenominator = 2'000'000;

/// Rationals sorted by height.
using RationalList = std::vector<Rational>;

RationalList brute_best(const Target& x, std::int64_t q_max);
RationalList brute_signed(const Target& x, std::int64_t q_max);
/// Best approximations among one class or the union of two classes.
RationalList brute_best_class(const Target& x, std::int64_t q_max, const std::vector<Sym>& classes);
RationalList brute_s_alpha(const Target& x, std::int64_t q_max, Sym alpha);
/// Dispatch on the set name.
RationalList brute_set(const Target& x, SetId set, std::int64_t q_max);

/// Quadratic-time scan comparing every candidate with every competitor
/// near the line; meant for small q_max.
RationalList definitional_set(const Target& x, SetId set, std::int64_t q_max);

struct Vec2 {
  std::int64_t p = 0, q = 0;
  friend bool operator==(const Vec2&, const Vec2&) = default;
};

enum class Parallelogram : std::uint8_t { PS, PB };

bool is_primitive(const Vec2& v);
/// Lambda^(0): p even; Lambda^(1): p + q even; Lambda^(inf): q even.
bool in_lattice(const Vec2& v, Sym alpha);
/// u in {a (p - qx, 0) + b (qx, q)} with (a, b) in [0,1]^2 (PS) or
/// [-1,1]^2 (PB), boundary included. Requires v.q >= 1.
bool parallelogram_contains(const Target& x, const Vec2& v, Parallelogram kind, const Vec2& u);
/// Every integer vector of the parallelogram.
std::vector<Vec2> lattice_points(const Target& x, const Vec2& v, Parallelogram kind);

/// The set recomputed from the parallelogram criteria.
RationalList geometric_set(const Target& x, SetId set, std::int64_t q_max);

struct CheckLine {
  std::string name;
  bool ok = true;
  std::string detail;
};

/// Parallelogram route vs scan route for B, S, S_alpha and the six class
/// sets.
std::vector<CheckLine> geometric_best_check(const Target& x, std::int64_t q_max);

struct ParallelogramLemmaReport {
  std::size_t samples = 0;
  std::size_t hypothesis_i = 0;   // samples where (i)'s hypothesis held
  std::size_t hypothesis_ii = 0;  // samples where (ii)'s hypothesis held
  std::vector<std::string> failures;
};

/// Samples primitive v = (p, q) near the line through (x, 1) and checks
/// both directions of the lattice lemma by exhaustive enumeration.
ParallelogramLemmaReport parallelogram_lemma_property(const Target& x, std::size_t samples, std::uint64_t seed);
ParallelogramLemmaReport parallelogram_lemma_check(const Target& x, const Vec2& v);

}  // namespace paritycf
