#include "paritycf/parity_best.hpp"

#include <algorithm>
#include <stdexcept>

namespace paritycf {

namespace {

constexpr std::array<std::string_view, 11> kSetNames{"B",  "S",   "B0",    "B1",    "Binf", "B01",
                                                     "B0inf", "B1inf", "S0", "S1", "Sinf"};

// Class of the vector (p, q), which also covers 1/0.
Sym vector_class(const BigInt& p, const BigInt& q) {
  const bool p_odd = mpz_odd_p(p.get_mpz_t()) != 0;
  const bool q_odd = mpz_odd_p(q.get_mpz_t()) != 0;
  if (!p_odd) return Sym::Zero;
  return q_odd ? Sym::One : Sym::Inf;
}

std::size_t membership_index(SetId s) {
  for (std::size_t i = 0; i < kMembershipSets.size(); ++i) {
    if (kMembershipSets[i] == s) return i;
  }
  throw std::invalid_argument("not a parity-class set");
}

void classify(ApproxRecord& r) {
  r.parity = parity_of(r.value);
  for (Sym a : kAllSyms) r.memberships[membership_index(class_set(a))] = r.in_S && r.parity == a;
  for (Sym a : kAllSyms) {
    for (Sym b : kAllSyms) {
      if (!(a < b)) continue;
      const Sym g = third(a, b);
      r.memberships[membership_index(pair_set(a, b))] =
          (r.in_B && (r.parity == a || r.parity == b)) || r.s_class == g;
    }
  }
}

}  // namespace

std::string_view to_string(SetId s) { return kSetNames[static_cast<std::size_t>(s)]; }

std::optional<SetId> set_from_string(std::string_view s) {
  for (SetId id : kAllSets) {
    if (to_string(id) == s) return id;
  }
  return std::nullopt;
}

SetId class_set(Sym a) {
  switch (a) {
    case Sym::Zero: return SetId::B0;
    case Sym::One: return SetId::B1;
    case Sym::Inf: return SetId::BInf;
  }
  return SetId::B0;
}

SetId pair_set(Sym a, Sym b) {
  switch (third(a, b)) {
    case Sym::Inf: return SetId::B01;
    case Sym::One: return SetId::B0Inf;
    case Sym::Zero: return SetId::B1Inf;
  }
  return SetId::B01;
}

SetId s_alpha_set(Sym a) {
  switch (a) {
    case Sym::Zero: return SetId::S0;
    case Sym::One: return SetId::S1;
    case Sym::Inf: return SetId::SInf;
  }
  return SetId::S0;
}

std::vector<Sym> set_labels(SetId s) {
  switch (s) {
    case SetId::B:
    case SetId::S: return {};
    case SetId::B0:
    case SetId::S0: return {Sym::Zero};
    case SetId::B1:
    case SetId::S1: return {Sym::One};
    case SetId::BInf:
    case SetId::SInf: return {Sym::Inf};
    case SetId::B01: return {Sym::Zero, Sym::One};
    case SetId::B0Inf: return {Sym::Zero, Sym::Inf};
    case SetId::B1Inf: return {Sym::One, Sym::Inf};
  }
  return {};
}

bool height_less(const Rational& u, const Rational& v) {
  const int c = cmp(u.get().get_den(), v.get().get_den());
  if (c != 0) return c < 0;
  return cmp(u.get().get_num(), v.get().get_num()) < 0;
}

void sort_by_height(std::vector<Rational>& v) { std::sort(v.begin(), v.end(), height_less); }

bool record_in(const ApproxRecord& r, SetId s) {
  switch (s) {
    case SetId::B: return r.in_B;
    case SetId::S: return r.in_S;
    case SetId::S0: return r.s_class == Sym::Zero;
    case SetId::S1: return r.s_class == Sym::One;
    case SetId::SInf: return r.s_class == Sym::Inf;
    default: return r.memberships[membership_index(s)];
  }
}

std::vector<ApproxRecord> signed_records(RcfStream& s, const BigInt& q_max) {
  std::vector<ApproxRecord> out;
  if (q_max < 1) return out;
  {
    const Convergent c0 = s.convergent(0);
    ApproxRecord r;
    r.value = Rational(c0.p, c0.q);
    r.kind = Kind::Principal;
    r.n = 0;
    r.in_S = true;
    r.in_B = s.term(1) != 1;
    if (!r.in_B) r.s_class = parity_of(Rational(BigInt(c0.p + 1)));
    classify(r);
    out.push_back(std::move(r));
  }
  for (long n = 1;; ++n) {
    const Convergent c1 = s.convergent(n - 1);
    const Convergent c2 = s.convergent(n - 2);
    const BigInt& a = s.term(static_cast<std::size_t>(n));
    // intermediates with k*q_{n-1} + q_{n-2} <= q_max
    BigInt k_hi = (q_max - c2.q) / c1.q;
    if (k_hi > a - 1) k_hi = a - 1;
    const Sym s_class = vector_class(c1.p, c1.q);
    for (BigInt k = 1; k <= k_hi; ++k) {
      ApproxRecord r;
      r.value = Rational(BigInt(k * c1.p + c2.p), BigInt(k * c1.q + c2.q));
      r.kind = Kind::Intermediate;
      r.n = n;
      r.k = k;
      r.in_S = true;
      r.s_class = s_class;
      classify(r);
      out.push_back(std::move(r));
    }
    const Convergent c = s.convergent(n);
    if (c.q > q_max) break;
    ApproxRecord r;
    r.value = Rational(c.p, c.q);
    r.kind = Kind::Principal;
    r.n = n;
    r.in_S = true;
    r.in_B = true;
    classify(r);
    out.push_back(std::move(r));
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const ApproxRecord& u, const ApproxRecord& v) { return height_less(u.value, v.value); });
  return out;
}

std::vector<ApproxRecord> rcf_set(RcfStream& s, SetId set, const Limit& limit) {
  auto filter = [&](const BigInt& q) {
    std::vector<ApproxRecord> all = signed_records(s, q);
    std::vector<ApproxRecord> out;
    for (auto& r : all) {
      if (record_in(r, set)) out.push_back(std::move(r));
    }
    return out;
  };
  if (limit.mode == Limit::Mode::Denominator) return filter(limit.value);
  if (set == SetId::S0 || set == SetId::S1 || set == SetId::SInf) {
    throw std::invalid_argument("count limits are not supported for S_alpha sets (they may be finite)");
  }
  if (limit.value <= 0) return {};
  for (BigInt q = 4;; q *= 4) {
    std::vector<ApproxRecord> out = filter(q);
    if (out.size() >= limit.value) {
      out.resize(limit.value.get_ui());
      return out;
    }
  }
}

std::array<bool, 6> intermediate_memberships(RcfStream& s, long n, const BigInt& k) {
  if (n < 1 || k < 1 || k >= s.term(static_cast<std::size_t>(n))) {
    throw std::invalid_argument("no intermediate convergent with this index");
  }
  const Convergent c1 = s.convergent(n - 1);
  const Convergent c2 = s.convergent(n - 2);
  const Sym alpha = vector_class(c1.p, c1.q);
  const Sym beta = vector_class(c2.p, c2.q);
  if (alpha == beta) throw std::logic_error("consecutive convergents share a parity class");
  const Sym gamma = third(alpha, beta);
  std::array<bool, 6> f{};
  f[membership_index(pair_set(beta, gamma))] = true;
  const bool k_odd = mpz_odd_p(k.get_mpz_t()) != 0;
  f[membership_index(class_set(k_odd ? gamma : beta))] = true;
  return f;
}

std::array<bool, 6> p0_memberships(RcfStream& s) {
  if (s.term(1) != 1) throw std::invalid_argument("p0 rules apply only when a1 = 1");
  const Sym alpha = vector_class(s.term(0), 1);
  std::array<bool, 6> f{};
  f[membership_index(class_set(alpha))] = true;
  f[membership_index(pair_set(alpha, Sym::Inf))] = true;
  return f;
}

}  // namespace paritycf
