#pragma once

// Interval maps on [0, 1] as shifts of the Delta-expression: Farey, Gauss,
// by-excess, even, odd and odd-odd continued fraction maps, and recovery of
// best (0,inf)- and (1)-approximations from inverse branches.

#include <memory>
#include <optional>
#include <string_view>
#include <vector>

#include "paritycf/delta.hpp"

namespace paritycf {

enum class MapKind : std::uint8_t { Farey, Gauss, ByExcess, Even, Odd, OddOdd };
inline constexpr std::array<MapKind, 6> kAllMaps{MapKind::Farey, MapKind::Gauss, MapKind::ByExcess,
                                                 MapKind::Even,  MapKind::Odd,   MapKind::OddOdd};

/// "farey", "gauss", "by-excess", "even", "odd", "oddodd"
std::string_view to_string(MapKind k);
std::optional<MapKind> map_from_string(std::string_view s);

struct MapStep {
  QuadraticSurd input, output;
  Mat2 branch;               // output = branch . input
  std::size_t consumed = 0;  // Delta-symbols shifted out
  Gamma relabel = Gamma::I;  // permutation applied to the remaining symbols
  BigInt m;                  // a1 for Gauss-type maps, m~ for odd-odd, 1 for Farey
};

/// One step on an irrational x in (0, 1). The branch comes from the
/// closed-form map; consumed/relabel come from the Delta-expression of x and
/// are checked against the branch. Throws std::invalid_argument outside the
/// domain.
MapStep map_step(MapKind kind, const QuadraticSurd& x);
std::vector<MapStep> map_orbit(MapKind kind, const QuadraticSurd& x, std::size_t steps);

/// The stream j -> perm(base[offset + j]).
class DeltaView {
 public:
  explicit DeltaView(std::shared_ptr<DeltaStream> base) : base_(std::move(base)) {}
  Sym symbol(std::size_t j) const { return perm_(base_->symbol(offset_ + j)); }
  std::size_t offset() const { return offset_; }
  const PermS3& perm() const { return perm_; }
  DeltaView shifted(std::size_t by, const PermS3& relabel) const;

 private:
  std::shared_ptr<DeltaStream> base_;
  std::size_t offset_ = 0;
  PermS3 perm_;
};

struct SymbolicStep {
  std::size_t consumed = 0;
  Gamma relabel = Gamma::I;
  std::size_t m = 0;
};

/// Reads m (or m~) and the relabelling off the stream. Requires the view
/// to start with inf (a point of [0, 1]).
SymbolicStep symbolic_rule(MapKind kind, const DeltaView& v);
DeltaView symbolic_step(MapKind kind, const DeltaView& v);

/// Gamma(relabel) . H_{a_c} ... H_{a_1} for the consumed symbols a_1..a_c.
Mat2 symbolic_branch(const DeltaView& v, const SymbolicStep& rule);

struct GaussFareyReport {
  std::size_t checks = 0;
  bool ok = true;
  std::string first_failure;
};
/// psi(x) = phi^{a1(x)}(x) along n successive Gauss steps, exactly.
GaussFareyReport gauss_equals_farey_power(const QuadraticSurd& x, std::size_t n_checks);

/// (psi_J)^{-i}_x (0) for i = 0 .. i_max - 1.
std::vector<Rational> even_inverse_orbit(const QuadraticSurd& x, std::size_t i_max);
/// (psi_1)^{-i}_x (1) for i = 0 .. i_max - 1.
std::vector<Rational> oddodd_inverse_orbit(const QuadraticSurd& x, std::size_t i_max);

}  // namespace paritycf
