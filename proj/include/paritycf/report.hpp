#pragma once

// Route runner: one approximation set computed by the continued-fraction
// route, the Delta-word route or the brute-force oracle, plus the per-row
// annotation (classification and witnessing Delta-word) used by the tables.

#include <optional>
#include <string_view>
#include <vector>

#include "paritycf/delta.hpp"
#include "paritycf/oracle.hpp"
#include "paritycf/parity_best.hpp"

namespace paritycf {

enum class Route : std::uint8_t { Rcf, Delta, Oracle, All };

/// "rcf", "delta", "oracle", "all"
std::string_view to_string(Route r);
std::optional<Route> route_from_string(std::string_view s);

struct ReportRow {
  ApproxRecord record;
  /// False when the value is not a signed best approximation, so the
  /// classification fields are meaningless (only reachable with faults).
  bool classified = true;
  std::optional<DeltaWord> word;
  std::size_t m = 0;
};

/// The set along one route. Route::All runs the three routes and throws
/// RouteMismatch naming the first disagreement. The oracle route throws
/// std::out_of_range beyond its denominator cap.
RationalList route_values(const RealInput& x, SetId set, Route route, const Limit& limit);

/// Classification from the continued fraction and the Delta-word witness
/// for each value. Witnesses are omitted when a decimal input runs out of
/// precision.
std::vector<ReportRow> annotate(const RealInput& x, SetId set, const RationalList& values);

std::vector<ReportRow> approximation_table(const RealInput& x, SetId set, Route route, const Limit& limit);

/// Test hook: the given route drops its last value (or gains a spurious one
/// when empty). nullopt restores normal behaviour. Process-wide.
void inject_fault(std::optional<Route> route);

}  // namespace paritycf
