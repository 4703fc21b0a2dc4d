#include "paritycf/report.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <stdexcept>

#include "paritycf/delta_sets.hpp"

namespace paritycf {

namespace {

// -1 means no fault.
std::atomic<int> g_fault{-1};

bool is_s_alpha(SetId s) { return s == SetId::S0 || s == SetId::S1 || s == SetId::SInf; }

RationalList oracle_values(const RealInput& x, SetId set, const Limit& limit) {
  const Target t(x);
  const BigInt cap(static_cast<long>(kOracleMaxDenominator));
  if (limit.mode == Limit::Mode::Denominator) {
    if (limit.value > cap) {
      throw std::out_of_range("oracle denominators are capped at " + cap.get_str());
    }
    if (limit.value < 1) return {};
    return brute_set(t, set, limit.value.get_si());
  }
  if (limit.value <= 0) return {};
  for (std::int64_t q = 4;; q = std::min<std::int64_t>(4 * q, kOracleMaxDenominator)) {
    RationalList out = brute_set(t, set, q);
    if (out.size() >= limit.value) {
      out.resize(limit.value.get_ui());
      return out;
    }
    if (q == kOracleMaxDenominator) {
      throw std::out_of_range("oracle reached its denominator cap before " + limit.value.get_str() + " members");
    }
  }
}

RationalList single_route(const RealInput& x, SetId set, Route route, const Limit& limit) {
  RationalList out;
  switch (route) {
    case Route::Rcf: {
      RcfStream s(x);
      for (auto& r : rcf_set(s, set, limit)) out.push_back(std::move(r.value));
      break;
    }
    case Route::Delta: {
      DeltaStream s = DeltaStream::from_rcf(RcfStream(x));
      for (auto& w : delta_set(s, set, limit)) out.push_back(std::move(w.value));
      break;
    }
    case Route::Oracle: out = oracle_values(x, set, limit); break;
    case Route::All: throw std::logic_error("single_route(All)");
  }
  if (g_fault.load() == static_cast<int>(route)) {
    if (out.empty()) {
      out.emplace_back(-1);
    } else {
      out.pop_back();
    }
  }
  return out;
}

std::string describe(const RationalList& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].str();
  return s + "}";
}

std::string first_difference(const RationalList& a, const RationalList& b) {
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] != b[i]) return "position " + std::to_string(i) + ": " + a[i].str() + " vs " + b[i].str();
  }
  if (a.size() != b.size()) {
    return "sizes " + std::to_string(a.size()) + " vs " + std::to_string(b.size()) + " (" + describe(a) + " vs " +
           describe(b) + ")";
  }
  return "equal";
}

}  // namespace

std::string_view to_string(Route r) {
  switch (r) {
    case Route::Rcf: return "rcf";
    case Route::Delta: return "delta";
    case Route::Oracle: return "oracle";
    case Route::All: return "all";
  }
  return "?";
}

std::optional<Route> route_from_string(std::string_view s) {
  for (Route r : {Route::Rcf, Route::Delta, Route::Oracle, Route::All}) {
    if (to_string(r) == s) return r;
  }
  return std::nullopt;
}

RationalList route_values(const RealInput& x, SetId set, Route route, const Limit& limit) {
  if (limit.mode == Limit::Mode::Count && is_s_alpha(set)) {
    throw std::invalid_argument("count limits are not supported for S_alpha sets (they may be finite)");
  }
  if (route != Route::All) return single_route(x, set, route, limit);

  const RationalList rcf = single_route(x, set, Route::Rcf, limit);
  const RationalList delta = single_route(x, set, Route::Delta, limit);
  const RationalList oracle = single_route(x, set, Route::Oracle, limit);
  std::string msg;
  if (rcf != delta) msg += "rcf vs delta: " + first_difference(rcf, delta) + "; ";
  if (rcf != oracle) msg += "rcf vs oracle: " + first_difference(rcf, oracle) + "; ";
  if (delta != oracle) msg += "delta vs oracle: " + first_difference(delta, oracle) + "; ";
  if (!msg.empty()) {
    msg.resize(msg.size() - 2);
    throw RouteMismatch(std::string(to_string(set)) + " routes disagree: " + msg);
  }
  return rcf;
}

std::vector<ReportRow> annotate(const RealInput& x, SetId set, const RationalList& values) {
  std::vector<ReportRow> rows(values.size());
  if (values.empty()) return rows;
  BigInt q_max = 0;
  for (const auto& v : values) q_max = std::max(q_max, v.den());

  std::map<Rational, ApproxRecord> records;
  try {
    RcfStream s(x);
    for (auto& r : signed_records(s, q_max)) records.emplace(r.value, r);
  } catch (const PrecisionExhausted&) {
    // Rows stay unclassified.
  }
  std::map<Rational, DeltaWitness> witnesses;
  try {
    DeltaStream d = DeltaStream::from_rcf(RcfStream(x));
    for (auto& w : delta_set(d, set, q_max)) witnesses.emplace(w.value, w);
  } catch (const PrecisionExhausted&) {
    // The Delta-word enumeration looks a few symbols further than the continued fraction one.
  }

  for (std::size_t i = 0; i < values.size(); ++i) {
    ReportRow& row = rows[i];
    if (auto it = records.find(values[i]); it != records.end()) {
      row.record = it->second;
    } else {
      row.record.value = values[i];
      row.record.parity = parity_of(values[i]);
      row.classified = false;
    }
    if (auto it = witnesses.find(values[i]); it != witnesses.end()) {
      row.word = it->second.word;
      row.m = it->second.m;
    }
  }
  return rows;
}

std::vector<ReportRow> approximation_table(const RealInput& x, SetId set, Route route, const Limit& limit) {
  return annotate(x, set, route_values(x, set, route, limit));
}

void inject_fault(std::optional<Route> route) { g_fault.store(route ? static_cast<int>(*route) : -1); }

}  // namespace paritycf
