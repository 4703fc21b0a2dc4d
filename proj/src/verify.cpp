#include "paritycf/verify.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <set>
#include <sstream>

#include "paritycf/cfmaps.hpp"
#include "paritycf/delta_sets.hpp"

namespace paritycf {

namespace {

using RSet = std::set<Rational>;

CheckLine pass(std::string name, std::string detail = "") { return {std::move(name), true, std::move(detail)}; }
CheckLine fail(std::string name, std::string detail) { return {std::move(name), false, std::move(detail)}; }

std::string show(const RSet& s) {
  std::string out = "{";
  for (const auto& r : s) out += (out.size() > 1 ? ", " : "") + r.str();
  return out + "}";
}

std::string show(const std::optional<Rational>& r) { return r ? r->str() : "inf"; }

RSet meet(const RSet& a, const RSet& b) {
  RSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
  return out;
}
RSet join(const RSet& a, const RSet& b) {
  RSet out = a;
  out.insert(b.begin(), b.end());
  return out;
}
RSet minus(const RSet& a, const RSet& b) {
  RSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
  return out;
}
RSet of_class(const RSet& a, std::initializer_list<Sym> classes) {
  RSet out;
  for (const auto& r : a) {
    if (std::find(classes.begin(), classes.end(), parity_of(r)) != classes.end()) out.insert(r);
  }
  return out;
}

std::optional<Rational> ratio(const BigInt& p, const BigInt& q) {
  if (q == 0) return std::nullopt;
  return Rational(p, q);
}

bool between(const Rational& x, const Rational& a, const Rational& b) {
  return (a <= x && x <= b) || (b <= x && x <= a);
}

Sym class_of_point(const std::optional<Rational>& r) { return r ? parity_of(*r) : Sym::Inf; }

}  // namespace

std::vector<CheckLine> check_routes(const RealInput& x, std::int64_t q_max) {
  std::vector<CheckLine> out;
  const Target t(x);
  RcfStream rcf(x);
  DeltaStream delta = DeltaStream::from_rcf(RcfStream(x));
  for (SetId set : kAllSets) {
    RationalList a, b;
    for (auto& r : rcf_set(rcf, set, Limit::denominator(q_max))) a.push_back(r.value);
    for (auto& w : delta_set(delta, set, BigInt(q_max))) b.push_back(w.value);
    const RationalList c = brute_set(t, set, q_max);
    const std::string name = "routes " + std::string(to_string(set));
    if (a == b && b == c) {
      out.push_back(pass(name, std::to_string(a.size()) + " members"));
    } else {
      out.push_back(fail(name, "rcf " + show(RSet(a.begin(), a.end())) + " delta " + show(RSet(b.begin(), b.end())) +
                                   " oracle " + show(RSet(c.begin(), c.end()))));
    }
  }
  return out;
}

CheckLine check_definitional(const RealInput& x, std::int64_t q_max) {
  const Target t(x);
  for (SetId set : kAllSets) {
    if (definitional_set(t, set, q_max) != brute_set(t, set, q_max)) {
      return fail("definitional scan", std::string(to_string(set)) + " differs at q <= " + std::to_string(q_max));
    }
  }
  return pass("definitional scan", "q <= " + std::to_string(q_max));
}

CheckLine check_set_identities(const RealInput& x, const BigInt& q_max) {
  const std::string name = "set identities";
  RcfStream rcf(x);
  std::map<SetId, RSet> sets;
  for (SetId set : kAllSets) {
    for (auto& r : rcf_set(rcf, set, Limit::denominator(q_max))) sets[set].insert(r.value);
  }
  const RSet& B = sets[SetId::B];
  const RSet& S = sets[SetId::S];
  auto Bc = [&](Sym a) -> const RSet& { return sets[class_set(a)]; };
  auto Bp = [&](Sym a, Sym b) -> const RSet& { return sets[pair_set(a, b)]; };
  auto Sa = [&](Sym a) -> const RSet& { return sets[s_alpha_set(a)]; };

  if (!minus(B, S).empty()) return fail(name, "B not inside S: " + show(minus(B, S)));
  const RSet classes = join(join(Bc(Sym::Zero), Bc(Sym::One)), Bc(Sym::Inf));
  std::size_t class_total = Bc(Sym::Zero).size() + Bc(Sym::One).size() + Bc(Sym::Inf).size();
  if (classes != S || class_total != S.size()) return fail(name, "S != B0 + B1 + Binf (disjoint)");
  const RSet pairs = join(join(Bp(Sym::Zero, Sym::One), Bp(Sym::Zero, Sym::Inf)), Bp(Sym::One, Sym::Inf));
  if (pairs != S) return fail(name, "S != B01 u B0inf u B1inf");

  const RSet signed_only = minus(S, B);
  std::size_t s_total = 0;
  RSet s_union;
  for (Sym a : kAllSyms) {
    s_total += Sa(a).size();
    s_union = join(s_union, Sa(a));
  }
  if (s_union != signed_only || s_total != signed_only.size()) {
    return fail(name, "S_0, S_1, S_inf do not partition S \\ B: " + show(s_union) + " vs " + show(signed_only));
  }

  for (Sym a : kAllSyms) {
    for (Sym b : kAllSyms) {
      if (a == b) continue;
      const Sym c = third(a, b);
      const std::string tag = std::string(to_string(a)) + "," + std::string(to_string(b));
      if (meet(Bp(a, b), Bp(a, c)) != of_class(B, {a})) {
        return fail(name, "B^(" + tag + ") n B^(" + std::string(to_string(a)) + "," + std::string(to_string(c)) +
                              ") != B n Q^(" + std::string(to_string(a)) + ")");
      }
      if (Bp(a, b) != join(of_class(B, {a, b}), Sa(c))) {
        return fail(name, "B^(" + tag + ") != (B n Q^(" + tag + ")) u S_" + std::string(to_string(c)));
      }
      if (!meet(of_class(B, {a, b}), Sa(c)).empty()) return fail(name, "B n Q^(" + tag + ") meets S_gamma");
      if (!minus(of_class(B, {a}), Bc(a)).empty()) return fail(name, "B n Q^(a) not inside B^(a)");
      if (!minus(of_class(B, {a, b}), Bp(a, b)).empty()) return fail(name, "B n Q^(" + tag + ") not inside B^(" + tag + ")");
      if (!minus(of_class(Bp(a, b), {a}), Bc(a)).empty()) return fail(name, "B^(" + tag + ") n Q^(a) not inside B^(a)");
    }
    if (Bc(a) != of_class(S, {a})) return fail(name, "B^(" + std::string(to_string(a)) + ") != S n Q^(a)");
  }

  // Explicit rules for intermediate convergents and for p0 when a1 = 1.
  for (const ApproxRecord& r : signed_records(rcf, q_max)) {
    if (r.kind == Kind::Intermediate) {
      if (intermediate_memberships(rcf, r.n, r.k) != r.memberships) {
        return fail(name, "intermediate rules disagree at " + r.value.str());
      }
    } else if (r.n == 0 && rcf.term(1) == 1) {
      if (p0_memberships(rcf) != r.memberships) return fail(name, "p0 rules disagree at " + r.value.str());
    }
  }
  return pass(name, std::to_string(S.size()) + " signed best approximations");
}

CheckLine check_delta_bookkeeping(const QuadraticSurd& x, std::size_t m_max) {
  const std::string name = "delta bookkeeping";
  const RealInput in = RealInput::surd(x);
  DeltaStream s = DeltaStream::from_rcf(RcfStream(in));
  RcfStream rcf(in);
  const BigInt a0 = s.a0_abs();

  Mat2 M, H;
  Gamma S = Gamma::I;
  std::size_t n = 0;  // m = |a0| + a_1 + ... + a_n + k
  BigInt acc = a0;
  for (std::size_t m = 1; m <= m_max; ++m) {
    const std::string at = " at m = " + std::to_string(m);
    const Sym am = s.symbol(m);
    const Sym next = s.symbol(m + 1);
    M = M * cut_matrix(s.letter(m));
    H = H * reflection(am);
    S = gamma_mul(S, s.s_letter(m));
    if (!(M == H * gamma_matrix(S))) return fail(name, "M_1..M_m != H_a1..H_am S_1..S_m" + at);
    if (s.cum_perm(m - 1)(s.eta(m)) != am) return fail(name, "a_m != S_1..S_{m-1} . eta_m" + at);
    if (am == next) return fail(name, "equal adjacent symbols" + at);
    const Sym d = s.delta_after(m);
    if (d == am || d == next) return fail(name, "delta complement" + at);

    if (BigInt(static_cast<unsigned long>(m)) < a0 + 1) continue;
    while (BigInt(static_cast<unsigned long>(m)) - acc >= rcf.term(n + 1)) {
      acc += rcf.term(n + 1);
      ++n;
    }
    const BigInt k = BigInt(static_cast<unsigned long>(m)) - acc;
    const Convergent c = rcf.convergent(static_cast<long>(n));
    const Convergent c1 = rcf.convergent(static_cast<long>(n) - 1);
    const auto inter = ratio(k * c.p + c1.p, k * c.q + c1.q);
    if (apply_to_cusp(H, next) != inter) {
      return fail(name, "H_a1..H_am . a_{m+1} = " + show(apply_to_cusp(H, next)) + " expected " + show(inter) + at);
    }
    if (apply_to_cusp(H, d) != ratio(c.p, c.q)) return fail(name, "H_a1..H_am . delta_{m+1} != p_n/q_n" + at);
    if (BigInt(static_cast<unsigned long>(m)) >= a0 + 2) {
      const bool same = s.delta_after(m - 1) == d;
      if (same != (k != 0)) return fail(name, "delta_m = delta_{m+1} iff k != 0 fails" + at);
    }
  }
  return pass(name, "m <= " + std::to_string(m_max));
}

CheckLine check_delta_routes(const QuadraticSurd& x, std::size_t terms) {
  DeltaStream cut = DeltaStream::from_rcf(RcfStream(RealInput::surd(x)));
  DeltaStream geo = DeltaStream::geometric(x);
  for (std::size_t m = 1; m <= terms; ++m) {
    if (cut.symbol(m) != geo.symbol(m)) {
      return fail("delta routes", "cutting and geometric differ at m = " + std::to_string(m));
    }
  }
  return pass("delta routes", std::to_string(terms) + " symbols");
}

CheckLine check_cylinders(const QuadraticSurd& x, std::size_t m_max) {
  const std::string name = "cylinders";
  DeltaStream s = DeltaStream::geometric(x);
  std::optional<Cylinder> prev;
  for (std::size_t m = 1; m <= m_max; ++m) {
    const std::string at = " at m = " + std::to_string(m);
    Cylinder c = cylinder(s, m);
    if (class_of_point(c.end_beta) != c.beta || class_of_point(c.end_gamma) != c.gamma) {
      return fail(name, "endpoint parity labels" + at);
    }
    DeltaWord wb{std::vector<Sym>(c.word.begin(), c.word.end() - 1), {c.word.back(), c.gamma}};
    DeltaWord wg{std::vector<Sym>(c.word.begin(), c.word.end() - 1), {c.word.back(), c.beta}};
    if (delta_word_eval(wb) != c.end_beta || delta_word_eval(wg) != c.end_gamma) {
      return fail(name, "endpoints differ from their Delta-words" + at);
    }
    if (c.end_beta && c.end_gamma) {
      const Rational& u = *c.end_beta;
      const Rational& v = *c.end_gamma;
      // x in [u, v]: compare exactly through the surd.
      const QuadraticSurd xu = x - QuadraticSurd(u), xv = x - QuadraticSurd(v);
      if (xu.sign() * xv.sign() > 0) return fail(name, "x outside I" + at);
      if (prev && prev->end_beta && prev->end_gamma) {
        if (!between(u, *prev->end_beta, *prev->end_gamma) || !between(v, *prev->end_beta, *prev->end_gamma)) {
          return fail(name, "cylinders do not nest" + at);
        }
      }
    }
    prev = std::move(c);
  }
  return pass(name, "m <= " + std::to_string(m_max));
}

CheckLine check_map_steps(const QuadraticSurd& x, std::size_t steps, std::size_t compare) {
  for (MapKind kind : kAllMaps) {
    DeltaView v(std::make_shared<DeltaStream>(DeltaStream::geometric(x)));
    QuadraticSurd y = x;
    for (std::size_t i = 0; i < steps; ++i) {
      const MapStep st = map_step(kind, y);
      v = symbolic_step(kind, v);
      DeltaStream g = DeltaStream::geometric(st.output);
      for (std::size_t j = 1; j <= compare; ++j) {
        if (g.symbol(j) != v.symbol(j)) {
          return fail("map steps", std::string(to_string(kind)) + ": numeric and symbolic orbits differ at step " +
                                       std::to_string(i + 1));
        }
      }
      y = st.output;
    }
  }
  return pass("map steps", "6 maps x " + std::to_string(steps) + " steps");
}

CheckLine check_gauss_farey(const QuadraticSurd& x, std::size_t n_checks) {
  const GaussFareyReport r = gauss_equals_farey_power(x, n_checks);
  if (!r.ok) return fail("gauss = farey^a1", r.first_failure);
  return pass("gauss = farey^a1", std::to_string(r.checks) + " checks");
}

CheckLine check_inverse_orbits(const QuadraticSurd& x, std::size_t i_max) {
  for (int pass_no = 0; pass_no < 2; ++pass_no) {
    std::vector<Rational> orbit = pass_no == 0 ? even_inverse_orbit(x, i_max) : oddodd_inverse_orbit(x, i_max);
    BigInt q_max = 0;
    for (const auto& r : orbit) q_max = std::max(q_max, r.den());
    RcfStream rcf{RealInput::surd(x)};
    const SetId set = pass_no == 0 ? SetId::B0Inf : SetId::B1;
    RationalList expected;
    for (auto& r : rcf_set(rcf, set, Limit::denominator(q_max))) expected.push_back(r.value);
    sort_by_height(orbit);
    if (orbit != expected) {
      return fail("inverse orbits", std::string(pass_no == 0 ? "even" : "odd-odd") + " orbit " +
                                        show(RSet(orbit.begin(), orbit.end())) + " vs " + std::string(to_string(set)) +
                                        " " + show(RSet(expected.begin(), expected.end())));
    }
  }
  return pass("inverse orbits", "i < " + std::to_string(i_max));
}

CheckLine check_parallelogram_lemma(const RealInput& x, std::size_t samples, std::uint64_t seed) {
  const ParallelogramLemmaReport r = parallelogram_lemma_property(Target(x), samples, seed);
  std::ostringstream detail;
  detail << r.samples << " samples, (i) hypothesis " << r.hypothesis_i << ", (ii) hypothesis " << r.hypothesis_ii;
  if (!r.failures.empty()) return fail("lattice lemma", detail.str() + "; " + r.failures.front());
  return pass("lattice lemma", detail.str());
}

std::vector<CheckLine> verify_input(const RealInput& x, const VerifyOptions& opt) {
  std::vector<CheckLine> out = check_routes(x, opt.q_max);
  out.push_back(check_definitional(x, std::min(opt.q_max, opt.definitional_q)));
  for (auto& line : geometric_best_check(Target(x), std::min(opt.q_max, opt.geometric_q))) {
    line.name = "parallelogram " + line.name;
    out.push_back(std::move(line));
  }
  out.push_back(check_set_identities(x, BigInt(opt.q_max)));
  out.push_back(check_parallelogram_lemma(x, opt.lemma_samples, opt.seed));
  if (!x.is_surd()) return out;

  const QuadraticSurd& s = x.value();
  out.push_back(check_delta_bookkeeping(s, opt.delta_terms));
  out.push_back(check_delta_routes(s, opt.delta_terms));
  out.push_back(check_cylinders(s, std::min<std::size_t>(opt.delta_terms, 60)));
  const QuadraticSurd unit = s - QuadraticSurd::integer(s.floor());
  out.push_back(check_map_steps(unit, opt.map_steps));
  out.push_back(check_gauss_farey(unit, std::max<std::size_t>(1, opt.map_steps / 5)));
  out.push_back(check_inverse_orbits(unit, opt.orbit_length));
  return out;
}

}  // namespace paritycf
