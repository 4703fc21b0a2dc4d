#pragma once

// Delta-expressions: the itinerary [a1, a2, ...] of x under the reflection
// group generated by H_0, H_1, H_inf, obtained either from the cutting
// sequence of the regular continued fraction or geometrically. Also finite
// eventually periodic Delta-words and the approximation sets they encode.

#include <cstddef>
#include <deque>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "paritycf/rcf.hpp"

namespace paritycf {

enum class CutLetter : std::uint8_t { L, Linv, R };
std::string_view to_string(CutLetter c);
const Mat2& cut_matrix(CutLetter c);

/// Lazily expanded Delta-expression. Symbols are 1-based.
class DeltaStream {
 public:
  /// Cutting-sequence route: L^{|a0|} (or L^{-1} when a0 < 0), R^{a1}, L^{a2}, ...
  static DeltaStream from_rcf(RcfStream rcf);
  /// Geometric route: alpha_m is the interval I_0 = [1, inf], I_1 = [-inf, 0]
  /// or I_inf = [0, 1] holding H_{alpha_{m-1}} ... H_{alpha_1} x.
  static DeltaStream geometric(const QuadraticSurd& x);

  bool is_cutting() const { return rcf_.has_value(); }
  const BigInt& a0_abs() const { return a0_abs_; }

  Sym symbol(std::size_t m);
  /// First m symbols.
  std::vector<Sym> prefix(std::size_t m);
  /// delta_{m+1}: the symbol other than alpha_m and alpha_{m+1} (m >= 1).
  Sym delta_after(std::size_t m) { return third(symbol(m), symbol(m + 1)); }

  // Cutting-sequence bookkeeping (from_rcf streams only).
  CutLetter letter(std::size_t m);
  Sym eta(std::size_t m);
  Gamma s_letter(std::size_t m);
  /// sigma of S_1 ... S_m (identity for m = 0).
  PermS3 cum_perm(std::size_t m);

  /// H_{alpha_1} ... H_{alpha_m} (identity for m = 0). Memoized.
  const Mat2& prefix_matrix(std::size_t m);

 private:
  DeltaStream() = default;
  void extend();

  std::optional<RcfStream> rcf_;
  std::optional<QuadraticSurd> point_;  // geometric state
  BigInt a0_abs_;

  std::vector<Sym> symbols_;
  std::vector<CutLetter> letters_;
  std::vector<Gamma> s_;
  std::vector<PermS3> cum_{PermS3::identity()};
  std::deque<Mat2> prefix_{Mat2::identity()};

  // Position inside the run of letters coming from term `term_`.
  std::size_t term_ = 0;
  BigInt used_in_term_ = 0;
};

/// A word [a1, ..., a_{m-1}, (x, y)*] denoting H_{a1} ... H_{a_{m-1}} z with
/// {x, y, z} = {0, 1, inf}.
struct DeltaWord {
  std::vector<Sym> prefix;
  std::pair<Sym, Sym> cycle{Sym::Zero, Sym::One};

  /// Throws std::invalid_argument on adjacent equal symbols.
  void validate() const;
  /// Unique representative of the value class: a prefix symbol equal to the
  /// cycle's second letter is absorbed into the cycle, and when both cycle
  /// orders are admissible the smaller first letter (0 < 1 < inf) is used.
  DeltaWord canonical() const;
  /// "inf,1,0,(1,inf)*"
  std::string str() const;

  friend bool operator==(const DeltaWord&, const DeltaWord&) = default;
};

/// Parses the text form produced by DeltaWord::str. Throws ParseError.
DeltaWord parse_delta_word(std::string_view text);
/// nullopt means the point at infinity. Throws std::invalid_argument for
/// malformed words.
std::optional<Rational> delta_word_eval(const DeltaWord& w);
bool same_value(const DeltaWord& u, const DeltaWord& v);

struct Cylinder {
  std::vector<Sym> word;
  /// H_{a1} ... H_{a_{m-1}} beta_m and ... gamma_m, with beta_m < gamma_m
  /// in the symbol order; nullopt is the point at infinity.
  std::optional<Rational> end_beta, end_gamma;
  Sym beta, gamma;
};
/// Cylinder I_{a1 ... am}, m >= 1.
Cylinder cylinder(DeltaStream& s, std::size_t m);

}  // namespace paritycf
