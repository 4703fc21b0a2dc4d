#include "paritycf/delta_sets.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace paritycf {

namespace {

bool is_s_alpha(SetId set) { return set == SetId::S0 || set == SetId::S1 || set == SetId::SInf; }

DeltaWord word_at(DeltaStream& s, std::size_t m, Sym tail) {
  DeltaWord w;
  w.prefix = s.prefix(m - 1);
  w.cycle = {s.symbol(m), tail};
  return w;
}

Rational evaluate(const Mat2& p, Sym cusp) {
  const auto v = apply_to_cusp(p, cusp);
  if (!v) throw std::logic_error("Delta-word evaluated to infinity");
  return *v;
}

}  // namespace

SignedSplit s_gamma_split(DeltaStream& s, std::size_t m) {
  const BigInt first = s.a0_abs() + 1;
  if (m < first) throw std::invalid_argument("s_gamma_split needs m >= |a0| + 1");
  if (first == m || s.symbol(m - 1) == s.symbol(m + 1)) return SignedSplit::InSDelta;
  return SignedSplit::InB;
}

std::vector<DeltaWitness> delta_set(DeltaStream& s, SetId set, const BigInt& q_max) {
  std::vector<DeltaWitness> out;
  if (q_max < 1) return out;
  std::map<std::pair<BigInt, BigInt>, std::size_t> seen;  // (q, p) -> index in out
  auto emit = [&](Rational v, DeltaWord w, std::size_t m) {
    if (v.den() > q_max) return;
    auto key = std::make_pair(v.den(), v.num());
    if (seen.count(key) != 0) return;
    seen.emplace(std::move(key), out.size());
    out.push_back(DeltaWitness{std::move(v), std::move(w), m});
  };

  const std::vector<Sym> labels = set_labels(set);
  int quiet = 0;  // consecutive m whose candidate values all exceed q_max
  for (std::size_t m = s.a0_abs().get_ui() + 1;; ++m) {
    const Mat2 p = s.prefix_matrix(m - 1);
    const Sym am = s.symbol(m);
    const Sym an = s.symbol(m + 1);
    const Sym dn = third(am, an);
    const Rational b_value = evaluate(p, dn);   // B-word
    const Rational s_value = evaluate(p, an);   // S-word
    switch (set) {
      case SetId::B:
        emit(b_value, word_at(s, m, an), m);
        break;
      case SetId::S:
        emit(s_value, word_at(s, m, dn), m);
        break;
      case SetId::B0:
      case SetId::B1:
      case SetId::BInf:
        if (an == labels[0]) emit(s_value, word_at(s, m, dn), m);
        break;
      case SetId::B01:
      case SetId::B0Inf:
      case SetId::B1Inf: {
        const Sym g = third(labels[0], labels[1]);
        if (am != g) emit(evaluate(p, third(am, g)), word_at(s, m, g), m);
        break;
      }
      default:
        if (dn == labels[0] && s_gamma_split(s, m) == SignedSplit::InSDelta) {
          emit(s_value, word_at(s, m, dn), m);
        }
        break;
    }
    if (b_value.den() > q_max && s_value.den() > q_max) {
      if (++quiet >= 3) break;
    } else {
      quiet = 0;
    }
  }
  std::sort(out.begin(), out.end(),
            [](const DeltaWitness& u, const DeltaWitness& v) { return height_less(u.value, v.value); });
  return out;
}

std::vector<DeltaWitness> delta_set(DeltaStream& s, SetId set, const Limit& limit) {
  if (limit.mode == Limit::Mode::Denominator) return delta_set(s, set, limit.value);
  if (is_s_alpha(set)) {
    throw std::invalid_argument("count limits are not supported for S_alpha sets (they may be finite)");
  }
  if (limit.value <= 0) return {};
  for (BigInt q = 4;; q *= 4) {
    std::vector<DeltaWitness> out = delta_set(s, set, q);
    if (out.size() >= limit.value) {
      out.resize(limit.value.get_ui());
      return out;
    }
  }
}

}  // namespace paritycf
