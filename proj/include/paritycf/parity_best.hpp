#pragma once

// Parity-constrained best approximation sets read off the regular continued
// fraction: B, S, S_alpha, B^(alpha) and B^(alpha,beta).

#include <array>
#include <optional>
#include <string_view>
#include <vector>

#include "paritycf/rcf.hpp"

namespace paritycf {

enum class SetId : std::uint8_t { B, S, B0, B1, BInf, B01, B0Inf, B1Inf, S0, S1, SInf };
inline constexpr std::array<SetId, 11> kAllSets{SetId::B,  SetId::S,   SetId::B0,    SetId::B1,
                                                SetId::BInf, SetId::B01, SetId::B0Inf, SetId::B1Inf,
                                                SetId::S0, SetId::S1,  SetId::SInf};

/// "B", "S", "B0", "B1", "Binf", "B01", "B0inf", "B1inf", "S0", "S1", "Sinf".
std::string_view to_string(SetId s);
std::optional<SetId> set_from_string(std::string_view s);
SetId class_set(Sym alpha);              // B^(alpha)
SetId pair_set(Sym alpha, Sym beta);     // B^(alpha,beta), alpha != beta
SetId s_alpha_set(Sym alpha);            // S_alpha
/// The parity labels in the set's name: {a} for B^(a) and S_a, {a, b} for
/// B^(a,b), none for B and S.
std::vector<Sym> set_labels(SetId s);

/// Enumeration bound: all members with denominator <= value, or the first
/// `value` members in (denominator, numerator) order.
struct Limit {
  enum class Mode : std::uint8_t { Denominator, Count };
  Mode mode = Mode::Denominator;
  BigInt value = 0;

  static Limit denominator(BigInt q) { return Limit{Mode::Denominator, std::move(q)}; }
  static Limit count(BigInt n) { return Limit{Mode::Count, std::move(n)}; }
};

/// Order used for every emitted set: by denominator, then numerator. (Two
/// members share a denominator only at q = 1: a0 and a0 + 1.)
bool height_less(const Rational& u, const Rational& v);
void sort_by_height(std::vector<Rational>& v);

enum class Kind : std::uint8_t { Principal, Intermediate };

/// Index into the membership array: B^(0), B^(1), B^(inf), B^(0,1),
/// B^(0,inf), B^(1,inf).
inline constexpr std::array<SetId, 6> kMembershipSets{SetId::B0,  SetId::B1,    SetId::BInf,
                                                      SetId::B01, SetId::B0Inf, SetId::B1Inf};

struct ApproxRecord {
  Rational value;
  Kind kind = Kind::Principal;
  long n = 0;
  BigInt k = 0;  // 0 for principal convergents
  ParityClass parity = Sym::Zero;
  bool in_B = false;
  bool in_S = false;
  std::optional<ParityClass> s_class;
  std::array<bool, 6> memberships{};
};

bool record_in(const ApproxRecord& r, SetId s);

/// All members of S(x) with denominator <= q_max, ordered by height, with
/// continued-fraction classification filled in.
std::vector<ApproxRecord> signed_records(RcfStream& s, const BigInt& q_max);

/// Members of one set under a limit. Count limits are rejected for S_alpha
/// (which may be finite) with std::invalid_argument.
std::vector<ApproxRecord> rcf_set(RcfStream& s, SetId set, const Limit& limit);

/// Membership flags of p_{n,k}/q_{n,k} by the explicit rules for
/// intermediate convergents (independent of the closed-form rule).
std::array<bool, 6> intermediate_memberships(RcfStream& s, long n, const BigInt& k);
/// Flags of p_0/q_0 = a0 when a1 = 1 by the dedicated rules.
std::array<bool, 6> p0_memberships(RcfStream& s);

}  // namespace paritycf
