#include "paritycf/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>

namespace paritycf {

namespace {

using i64 = std::int64_t;
using i128 = __int128;

constexpr i64 kCoefficientBound = i64{1} << 40;

bool fits(const BigInt& v) { return mpz_fits_slong_p(v.get_mpz_t()) != 0 && ::abs(v) < kCoefficientBound; }

int sgn128(i128 v) { return (v > 0) - (v < 0); }

Rational rat(i64 p, i64 q) { return Rational(BigInt(p), BigInt(q)); }

void check_range(i64 q_max) {
  if (q_max > kOracleMaxDenominator) {
    throw std::out_of_range("oracle denominators are capped at " + std::to_string(kOracleMaxDenominator));
  }
}

// Numerators admitted at denominator q by a union of parity classes.
enum class Allow : std::uint8_t { None, All, Even, Odd };

Allow allowed(i64 q, const std::vector<Sym>& classes) {
  auto has = [&](Sym s) { return std::find(classes.begin(), classes.end(), s) != classes.end(); };
  if (q % 2 == 0) return has(Sym::Inf) ? Allow::Odd : Allow::None;
  const bool even = has(Sym::Zero);
  const bool odd = has(Sym::One);
  if (even && odd) return Allow::All;
  if (even) return Allow::Even;
  if (odd) return Allow::Odd;
  return Allow::None;
}

bool admits(Allow a, i64 p) {
  switch (a) {
    case Allow::None: return false;
    case Allow::All: return true;
    case Allow::Even: return p % 2 == 0;
    case Allow::Odd: return p % 2 != 0;
  }
  return false;
}

// Largest admitted p <= f and smallest admitted p >= f + 1.
i64 admitted_below(Allow a, i64 f) { return admits(a, f) ? f : f - 1; }
i64 admitted_above(Allow a, i64 f) { return admits(a, f + 1) ? f + 1 : f + 2; }

Sym vec_class(i64 p, i64 q) {
  if (p % 2 == 0) return Sym::Zero;
  return q % 2 != 0 ? Sym::One : Sym::Inf;
}

bool in_classes(i64 p, i64 q, const std::vector<Sym>& classes) {
  return std::find(classes.begin(), classes.end(), vec_class(p, q)) != classes.end();
}

const std::vector<Sym> kEveryClass{Sym::Zero, Sym::One, Sym::Inf};

RationalList sorted(RationalList v) {
  sort_by_height(v);
  return v;
}

bool is_s_alpha(SetId s) { return s == SetId::S0 || s == SetId::S1 || s == SetId::SInf; }

bool contains(const RationalList& l, const Rational& r) { return std::find(l.begin(), l.end(), r) != l.end(); }

}  // namespace

// ------------------------------------------------------------------ Target

Target::Target(const RealInput& x) : x_(x) {
  const BigInt f = x.floor();
  if (::abs(f) >= BigInt(1 << 20)) throw std::out_of_range("oracle needs |x| < 2^20");
  approx_ = x.approx();
  if (x.is_surd()) {
    const QuadraticSurd& s = x.value();
    if (fits(s.a()) && fits(s.b()) && fits(s.c()) && fits(s.d())) {
      fast_ = true;
      a_ = s.a().get_si();
      b_ = s.b().get_si();
      c_ = s.c().get_si();
      d_ = s.d().get_si();
    }
  }
}

int Target::sign(i64 A, i64 B) const {
  if (fast_) {
    // sign(A a + B c + A b sqrt d)
    const i128 l = i128{A} * a_ + i128{B} * c_;
    const i128 r = i128{A} * b_;
    const int sl = sgn128(l);
    const int sr = sgn128(r);
    if (sr == 0) return sl;
    if (sl == 0 || sl == sr) return sr;
    using u128 = unsigned __int128;
    const u128 al = static_cast<u128>(l < 0 ? -l : l);
    const u128 ar = static_cast<u128>(r < 0 ? -r : r);
    u128 l2, r2, r2d;
    if (!__builtin_mul_overflow(al, al, &l2) && !__builtin_mul_overflow(ar, ar, &r2) &&
        !__builtin_mul_overflow(r2, static_cast<u128>(d_), &r2d)) {
      if (l2 > r2d) return sl;
      return sr;  // equality is impossible for an irrational x
    }
  }
  return x_.sign_affine(BigInt(static_cast<long>(A)), BigInt(static_cast<long>(B)));
}

i64 Target::floor_times(i64 j) const {
  auto n = static_cast<i64>(std::floor(static_cast<long double>(j) * static_cast<long double>(approx_)));
  while (sign(j, -n) < 0) --n;
  while (sign(j, -(n + 1)) >= 0) ++n;
  return n;
}

int Target::cmp_abs_err(i64 p1, i64 q1, i64 p2, i64 q2) const {
  const int s1 = sign(q1, -p1);
  const int s2 = sign(q2, -p2);
  return sign(s1 * q1 - s2 * q2, -(s1 * p1 - s2 * p2));
}

// ------------------------------------------------------------ minimality scans

RationalList brute_best_class(const Target& x, i64 q_max, const std::vector<Sym>& classes) {
  check_range(q_max);
  RationalList out;
  std::optional<std::pair<i64, i64>> best;
  for (i64 q = 1; q <= q_max; ++q) {
    const Allow a = allowed(q, classes);
    if (a == Allow::None) continue;
    const i64 f = x.floor_times(q);
    const i64 lo = admitted_below(a, f);
    const i64 hi = admitted_above(a, f);
    const i64 p = x.cmp_abs_err(lo, q, hi, q) < 0 ? lo : hi;
    if (!best || x.cmp_abs_err(p, q, best->first, best->second) < 0) {
      if (std::gcd(p, q) != 1) throw std::logic_error("oracle: non-reduced record");
      out.push_back(rat(p, q));
      best = {p, q};
    }
  }
  return sorted(std::move(out));
}

RationalList brute_best(const Target& x, i64 q_max) { return brute_best_class(x, q_max, kEveryClass); }

RationalList brute_signed(const Target& x, i64 q_max) {
  check_range(q_max);
  RationalList out;
  std::optional<std::pair<i64, i64>> pos, neg;
  for (i64 q = 1; q <= q_max; ++q) {
    const i64 f = x.floor_times(q);
    if (!pos || x.cmp_abs_err(f, q, pos->first, pos->second) < 0) {
      out.push_back(rat(f, q));
      pos = {f, q};
    }
    if (!neg || x.cmp_abs_err(f + 1, q, neg->first, neg->second) < 0) {
      out.push_back(rat(f + 1, q));
      neg = {f + 1, q};
    }
  }
  return sorted(std::move(out));
}

RationalList brute_s_alpha(const Target& x, i64 q_max, Sym alpha) {
  const RationalList s = brute_signed(x, q_max);
  const RationalList b = brute_best(x, q_max);
  const std::vector<Sym> cls{alpha};
  RationalList out;
  for (const Rational& r : s) {
    if (contains(b, r)) continue;
    const i64 p = r.num().get_si();
    const i64 q = r.den().get_si();
    bool witness = false;
    for (i64 bq = 1; bq <= q && !witness; ++bq) {
      const Allow a = allowed(bq, cls);
      if (a == Allow::None) continue;
      const i64 f = x.floor_times(bq);
      for (i64 ap : {admitted_below(a, f), admitted_above(a, f)}) {
        if (ap == p && bq == q) continue;
        if (x.cmp_abs_err(ap, bq, p, q) <= 0) {
          witness = true;
          break;
        }
      }
    }
    if (witness) out.push_back(r);
  }
  return out;
}

RationalList brute_set(const Target& x, SetId set, i64 q_max) {
  switch (set) {
    case SetId::B: return brute_best(x, q_max);
    case SetId::S: return brute_signed(x, q_max);
    case SetId::S0:
    case SetId::S1:
    case SetId::SInf: return brute_s_alpha(x, q_max, set_labels(set)[0]);
    default: return brute_best_class(x, q_max, set_labels(set));
  }
}

// ------------------------------------------------------- definitional scan

RationalList definitional_set(const Target& x, SetId set, i64 q_max) {
  check_range(q_max);
  std::vector<i64> fl(static_cast<std::size_t>(q_max) + 1);
  for (i64 q = 1; q <= q_max; ++q) fl[static_cast<std::size_t>(q)] = x.floor_times(q);

  // kind: 0 best, 1 signed, 2 class-restricted best
  auto scan = [&](int kind, const std::vector<Sym>& classes) {
    RationalList out;
    for (i64 q = 1; q <= q_max; ++q) {
      const i64 f = fl[static_cast<std::size_t>(q)];
      for (i64 p = f - 2; p <= f + 3; ++p) {
        if (std::gcd(p, q) != 1) continue;
        if (kind == 2 && !in_classes(p, q, classes)) continue;
        const int sp = x.sign(q, -p);
        bool ok = true;
        for (i64 b = 1; b <= q && ok; ++b) {
          const i64 fb = fl[static_cast<std::size_t>(b)];
          for (i64 a = fb - 2; a <= fb + 3 && ok; ++a) {
            if ((a == p && b == q) || std::gcd(a, b) != 1) continue;
            if (kind == 1 && x.sign(b, -a) != sp) continue;
            if (kind == 2 && !in_classes(a, b, classes)) continue;
            if (x.cmp_abs_err(a, b, p, q) <= 0) ok = false;
          }
        }
        if (ok) out.push_back(rat(p, q));
      }
    }
    return sorted(std::move(out));
  };

  switch (set) {
    case SetId::B: return scan(0, {});
    case SetId::S: return scan(1, {});
    case SetId::S0:
    case SetId::S1:
    case SetId::SInf: {
      const Sym alpha = set_labels(set)[0];
      const RationalList s = scan(1, {});
      const RationalList b = scan(0, {});
      RationalList out;
      for (const Rational& r : s) {
        if (contains(b, r)) continue;
        const i64 p = r.num().get_si();
        const i64 q = r.den().get_si();
        bool witness = false;
        for (i64 bq = 1; bq <= q && !witness; ++bq) {
          const i64 fb = fl[static_cast<std::size_t>(bq)];
          for (i64 a = fb - 2; a <= fb + 3 && !witness; ++a) {
            if ((a == p && bq == q) || std::gcd(a, bq) != 1 || vec_class(a, bq) != alpha) continue;
            if (x.cmp_abs_err(a, bq, p, q) <= 0) witness = true;
          }
        }
        if (witness) out.push_back(r);
      }
      return out;
    }
    default: return scan(2, set_labels(set));
  }
}

// ----------------------------------------------------------------- lattice

bool is_primitive(const Vec2& v) { return std::gcd(v.p, v.q) == 1; }

bool in_lattice(const Vec2& v, Sym alpha) {
  switch (alpha) {
    case Sym::Zero: return v.p % 2 == 0;
    case Sym::One: return (v.p + v.q) % 2 == 0;
    case Sym::Inf: return v.q % 2 == 0;
  }
  return false;
}

bool parallelogram_contains(const Target& x, const Vec2& v, Parallelogram kind, const Vec2& u) {
  if (v.q < 1) throw std::invalid_argument("parallelogram needs q >= 1");
  // u = a (p - qx, 0) + b (qx, q): b = u2/q, a = (u1 - u2 x)/(p - qx)
  if (u.q > v.q) return false;
  if (kind == Parallelogram::PS ? u.q < 0 : u.q < -v.q) return false;
  const int s = x.sign(-v.q, v.p);
  if (s * x.sign(-(u.q - v.q), u.p - v.p) > 0) return false;  // a <= 1
  if (kind == Parallelogram::PS) return s * x.sign(-u.q, u.p) >= 0;  // a >= 0
  return s * x.sign(-(u.q + v.q), u.p + v.p) >= 0;                   // a >= -1
}

namespace {

// Visits integer vectors of the parallelogram, |u2| increasing; stops when
// `fn` returns true and reports whether it did.
template <typename Fn>
bool visit_points(const Target& x, const Vec2& v, Parallelogram kind, Fn&& fn) {
  const i64 f = x.floor_times(v.q);
  const i64 e = std::max(std::abs(v.p - f), std::abs(v.p - f - 1)) + 1;  // |p - qx| < e
  auto row = [&](i64 u2) {
    const i64 fu = x.floor_times(u2);
    for (i64 u1 = fu - e; u1 <= fu + 1 + e; ++u1) {
      const Vec2 u{u1, u2};
      if (parallelogram_contains(x, v, kind, u) && fn(u)) return true;
    }
    return false;
  };
  if (row(0)) return true;
  for (i64 j = 1; j <= v.q; ++j) {
    if (row(j)) return true;
    if (kind == Parallelogram::PB && row(-j)) return true;
  }
  return false;
}

bool pb_clear(const Target& x, const Vec2& v, const std::vector<Sym>& classes) {
  const Vec2 mv{-v.p, -v.q};
  return !visit_points(x, v, Parallelogram::PB, [&](const Vec2& u) {
    if (u == v || u == mv || !is_primitive(u)) return false;
    return std::any_of(classes.begin(), classes.end(), [&](Sym a) { return in_lattice(u, a); });
  });
}

bool ps_clear(const Target& x, const Vec2& v) {
  return !visit_points(x, v, Parallelogram::PS,
                       [&](const Vec2& u) { return !(u == v) && !(u.p == 0 && u.q == 0); });
}

}  // namespace

std::vector<Vec2> lattice_points(const Target& x, const Vec2& v, Parallelogram kind) {
  std::vector<Vec2> out;
  visit_points(x, v, kind, [&](const Vec2& u) {
    out.push_back(u);
    return false;
  });
  return out;
}

RationalList geometric_set(const Target& x, SetId set, i64 q_max) {
  check_range(q_max);
  RationalList out;
  const std::vector<Sym> labels = set_labels(set);
  for (i64 q = 1; q <= q_max; ++q) {
    const i64 f = x.floor_times(q);
    std::vector<i64> candidates{f, f + 1};
    const bool restricted = !labels.empty() && !is_s_alpha(set);
    if (restricted) {
      const Allow a = allowed(q, labels);
      if (a == Allow::None) continue;
      candidates = {admitted_below(a, f), admitted_above(a, f)};
    }
    for (i64 p : candidates) {
      const Vec2 v{p, q};
      if (!is_primitive(v)) continue;
      bool member = false;
      switch (set) {
        case SetId::B: member = pb_clear(x, v, kEveryClass); break;
        case SetId::S: member = ps_clear(x, v); break;
        case SetId::S0:
        case SetId::S1:
        case SetId::SInf: member = ps_clear(x, v) && !pb_clear(x, v, labels); break;
        default: member = in_classes(p, q, labels) && pb_clear(x, v, labels); break;
      }
      if (member) out.push_back(rat(p, q));
    }
  }
  return sorted(std::move(out));
}

std::vector<CheckLine> geometric_best_check(const Target& x, i64 q_max) {
  std::vector<CheckLine> lines;
  for (SetId set : kAllSets) {
    const RationalList g = geometric_set(x, set, q_max);
    const RationalList b = brute_set(x, set, q_max);
    CheckLine line;
    line.name = std::string("parallelogram ") + std::string(to_string(set));
    line.ok = g == b;
    line.detail = std::to_string(g.size()) + " vs " + std::to_string(b.size()) + " members";
    lines.push_back(std::move(line));
  }
  return lines;
}

ParallelogramLemmaReport parallelogram_lemma_check(const Target& x, const Vec2& v) {
  ParallelogramLemmaReport rep;
  rep.samples = 1;
  const Sym alpha = vec_class(v.p, v.q);
  const bool hyp_b = pb_clear(x, v, {alpha});
  const bool hyp_s = ps_clear(x, v);
  auto where = [&] { return "v=(" + std::to_string(v.p) + "," + std::to_string(v.q) + ")"; };
  if (hyp_b) {
    ++rep.hypothesis_i;
    if (!hyp_s) rep.failures.push_back("(i) fails at " + where());
  }
  if (hyp_s) {
    ++rep.hypothesis_ii;
    if (!hyp_b) rep.failures.push_back("(ii) first claim fails at " + where());
    std::vector<Vec2> others;
    for (const Vec2& u : lattice_points(x, v, Parallelogram::PB)) {
      if ((u.p == 0 && u.q == 0) || u == v || (u.p == -v.p && u.q == -v.q)) continue;
      others.push_back(u);
    }
    for (std::size_t i = 1; i < others.size(); ++i) {
      if (others[0].p * others[i].q - others[0].q * others[i].p != 0) {
        rep.failures.push_back("(ii) proportionality fails at " + where());
        break;
      }
    }
  }
  return rep;
}

ParallelogramLemmaReport parallelogram_lemma_property(const Target& x, std::size_t samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<i64> q_dist(1, 40);
  std::uniform_int_distribution<i64> off_dist(-1, 2);
  ParallelogramLemmaReport total;
  while (total.samples < samples) {
    const i64 q = q_dist(rng);
    const Vec2 v{x.floor_times(q) + off_dist(rng), q};
    if (!is_primitive(v)) continue;
    const ParallelogramLemmaReport r = parallelogram_lemma_check(x, v);
    total.samples += 1;
    total.hypothesis_i += r.hypothesis_i;
    total.hypothesis_ii += r.hypothesis_ii;
    total.failures.insert(total.failures.end(), r.failures.begin(), r.failures.end());
  }
  return total;
}

}  // namespace paritycf
