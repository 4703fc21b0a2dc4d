#include "paritycf/cfmaps.hpp"

#include <stdexcept>

namespace paritycf {

namespace {

const Mat2& mat_J() { return gamma_matrix(Gamma::J); }
const Mat2& mat_KJ() { return gamma_matrix(Gamma::KJ); }

// (H_1 H_inf)^j = [[1,0],[-2j,1]] and H_inf (H_1 H_inf)^j = [[1,0],[2+2j,-1]].
Mat2 h1hinf_power(const BigInt& j) { return Mat2(1, 0, -2 * j, 1); }
Mat2 hinf_h1hinf_power(const BigInt& j) { return Mat2(1, 0, 2 + 2 * j, -1); }

// The word reaching 1/x - m (even m) or m + 1 - 1/x (odd m) from x.
Mat2 gauss_core(const BigInt& m) {
  if (mpz_even_p(m.get_mpz_t()) != 0) return h1hinf_power(m / 2);
  return hinf_h1hinf_power((m - 1) / 2);
}

bool is_even(const BigInt& m) { return mpz_even_p(m.get_mpz_t()) != 0; }

std::size_t first_index(const DeltaView& v, std::size_t from, Sym target, std::size_t shift) {
  for (std::size_t j = from;; ++j) {
    if (v.symbol(j + shift) == target) return j;
  }
}

}  // namespace

std::string_view to_string(MapKind k) {
  switch (k) {
    case MapKind::Farey: return "farey";
    case MapKind::Gauss: return "gauss";
    case MapKind::ByExcess: return "by-excess";
    case MapKind::Even: return "even";
    case MapKind::Odd: return "odd";
    case MapKind::OddOdd: return "oddodd";
  }
  return "?";
}

std::optional<MapKind> map_from_string(std::string_view s) {
  for (MapKind k : kAllMaps) {
    if (to_string(k) == s) return k;
  }
  return std::nullopt;
}

DeltaView DeltaView::shifted(std::size_t by, const PermS3& relabel) const {
  DeltaView v = *this;
  v.offset_ += by;
  v.perm_ = relabel.after(perm_);
  return v;
}

SymbolicStep symbolic_rule(MapKind kind, const DeltaView& v) {
  if (v.symbol(1) != Sym::Inf) throw std::invalid_argument("interval maps act on [0, 1]: stream must start with inf");
  SymbolicStep r;
  switch (kind) {
    case MapKind::Farey:
      r.m = 1;
      r.consumed = 1;
      r.relabel = gamma_of_perm(PermS3::sending(Sym::Inf, Sym::One, v.symbol(2), Sym::Inf));
      break;
    case MapKind::Gauss:
    case MapKind::ByExcess:
    case MapKind::Even:
    case MapKind::Odd: {
      const std::size_t m = first_index(v, 1, Sym::Zero, 1);  // min j >= 1 with a_{j+1} = 0
      r.m = m;
      r.consumed = m;
      if (kind == MapKind::Gauss) {
        r.relabel = gamma_of_perm(PermS3::sending(v.symbol(m), Sym::One, v.symbol(m + 1), Sym::Inf));
      } else if (kind == MapKind::ByExcess) {
        r.relabel = gamma_of_perm(PermS3::sending(v.symbol(m), Sym::Zero, v.symbol(m + 1), Sym::Inf));
      } else {
        r.relabel = kind == MapKind::Even ? Gamma::J : Gamma::KJ;
      }
      break;
    }
    case MapKind::OddOdd: {
      const std::size_t m = first_index(v, 1, Sym::One, 0);  // min j >= 1 with a_j = 1
      r.m = m;
      r.consumed = m;
      r.relabel = v.symbol(m + 1) == Sym::Inf ? Gamma::I : Gamma::J;
      break;
    }
  }
  return r;
}

DeltaView symbolic_step(MapKind kind, const DeltaView& v) {
  const SymbolicStep r = symbolic_rule(kind, v);
  return v.shifted(r.consumed, gamma_perm(r.relabel));
}

Mat2 symbolic_branch(const DeltaView& v, const SymbolicStep& rule) {
  Mat2 w = gamma_matrix(rule.relabel);
  for (std::size_t j = rule.consumed; j >= 1; --j) w = w * reflection(v.symbol(j));
  return w;
}

MapStep map_step(MapKind kind, const QuadraticSurd& x) {
  if (x.is_rational()) throw std::invalid_argument("interval maps need an irrational point");
  if (x.sign() <= 0 || sign_affine(x, 1, -1) >= 0) throw std::invalid_argument("interval maps need x in (0, 1)");
  MapStep st;
  st.input = x;
  switch (kind) {
    case MapKind::Farey:
      st.m = 1;
      st.branch = (sign_affine(x, 2, -1) < 0 ? gamma_matrix(Gamma::JKJ) : mat_KJ()) * reflection(Sym::Inf);
      break;
    case MapKind::Gauss:
    case MapKind::ByExcess:
    case MapKind::Even:
    case MapKind::Odd: {
      st.m = x.reciprocal().floor();
      const bool even = is_even(st.m);
      const Mat2 core = gauss_core(st.m);
      if (kind == MapKind::Gauss) {
        st.branch = (even ? mat_J() : mat_KJ()) * core;
      } else if (kind == MapKind::ByExcess) {
        st.branch = (even ? mat_KJ() : mat_J()) * core;
      } else {
        st.branch = (kind == MapKind::Even ? mat_J() : mat_KJ()) * core;
      }
      break;
    }
    case MapKind::OddOdd: {
      const BigInt k = (QuadraticSurd::integer(1) - x).reciprocal().floor();
      if (sign_affine(x, 2 * k + 1, -(2 * k - 1)) < 0) {
        st.branch = Mat2(k, -(k - 1), -(k + 1), k);
      } else {
        st.branch = Mat2(-(k + 1), k, k, -(k - 1));
      }
      break;
    }
  }
  st.output = moebius_apply(st.branch, x).value();

  // Symbolic side, read from the Delta-expression of x.
  const DeltaView v(std::make_shared<DeltaStream>(DeltaStream::geometric(x)));
  const SymbolicStep rule = symbolic_rule(kind, v);
  st.consumed = rule.consumed;
  st.relabel = rule.relabel;
  if (kind == MapKind::OddOdd) st.m = rule.m;
  if (kind != MapKind::Farey && kind != MapKind::OddOdd && BigInt(static_cast<unsigned long>(rule.m)) != st.m) {
    throw std::logic_error("m read from the Delta-expression differs from floor(1/x)");
  }
  if (!(symbolic_branch(v, rule) == st.branch)) {
    throw std::logic_error(std::string("branch of the ") + std::string(to_string(kind)) +
                           " map disagrees with its symbolic form");
  }
  return st;
}

std::vector<MapStep> map_orbit(MapKind kind, const QuadraticSurd& x, std::size_t steps) {
  std::vector<MapStep> out;
  QuadraticSurd y = x;
  for (std::size_t i = 0; i < steps; ++i) {
    out.push_back(map_step(kind, y));
    y = out.back().output;
  }
  return out;
}

GaussFareyReport gauss_equals_farey_power(const QuadraticSurd& x, std::size_t n_checks) {
  GaussFareyReport rep;
  QuadraticSurd y = x;
  for (std::size_t i = 0; i < n_checks; ++i) {
    const MapStep g = map_step(MapKind::Gauss, y);
    QuadraticSurd z = y;
    Mat2 w;
    for (BigInt j = 0; j < g.m; ++j) {
      const MapStep f = map_step(MapKind::Farey, z);
      z = f.output;
      w = f.branch * w;
    }
    ++rep.checks;
    if (!(z == g.output) || !(w == g.branch)) {
      rep.ok = false;
      rep.first_failure = "Gauss step " + std::to_string(i) + " at " + y.str();
      return rep;
    }
    y = g.output;
  }
  return rep;
}

namespace {

std::vector<Rational> inverse_orbit(MapKind kind, const QuadraticSurd& x, std::size_t i_max, Sym seed) {
  std::vector<Rational> out;
  Mat2 composite;
  QuadraticSurd y = x;
  for (std::size_t i = 0; i < i_max; ++i) {
    const auto v = apply_to_cusp(composite.inverse(), seed);
    if (!v) throw std::logic_error("inverse branch sent the seed to infinity");
    out.push_back(*v);
    if (i + 1 == i_max) break;
    const MapStep st = map_step(kind, y);
    composite = st.branch * composite;
    y = st.output;
  }
  return out;
}

}  // namespace

std::vector<Rational> even_inverse_orbit(const QuadraticSurd& x, std::size_t i_max) {
  return inverse_orbit(MapKind::Even, x, i_max, Sym::Zero);
}

std::vector<Rational> oddodd_inverse_orbit(const QuadraticSurd& x, std::size_t i_max) {
  return inverse_orbit(MapKind::OddOdd, x, i_max, Sym::One);
}

}  // namespace paritycf
