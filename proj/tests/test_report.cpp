#include "doctest.h"
#include "paritycf/report.hpp"
#include "paritycf/verify.hpp"
#include "props.hpp"

using namespace paritycf;

namespace {

Rational r(long p, long q = 1) { return Rational(BigInt(p), BigInt(q)); }

// Clears the process-wide fault hook when a test case ends.
struct FaultGuard {
  ~FaultGuard() { inject_fault(std::nullopt); }
};

}  // namespace

TEST_CASE("route names") {
  for (Route route : {Route::Rcf, Route::Delta, Route::Oracle, Route::All}) {
    CHECK(route_from_string(to_string(route)) == route);
  }
  CHECK_FALSE(route_from_string("fast").has_value());
}

TEST_CASE("all routes agree and rows are annotated") {
  const RealInput x = parse_input("sqrt(2)-1");
  const auto rows = approximation_table(x, SetId::B01, Route::All, Limit::denominator(50));
  REQUIRE(rows.size() == 5);
  CHECK(rows[1].record.value == r(1, 3));
  CHECK(rows[1].record.kind == Kind::Intermediate);
  CHECK(rows[1].record.s_class == Sym::Inf);
  REQUIRE(rows[2].word.has_value());
  CHECK(rows[2].word->str() == "inf,1,0,(1,inf)*");
  CHECK(rows[2].m == 4);
  for (const auto& row : rows) CHECK(row.classified);

  CHECK(route_values(x, SetId::B1, Route::Oracle, Limit::count(3)) == RationalList{r(1), r(1, 3), r(3, 7)});
  CHECK(route_values(x, SetId::B, Route::All, Limit::denominator(0)).empty());
  CHECK_THROWS_AS(route_values(x, SetId::S0, Route::Rcf, Limit::count(3)), std::invalid_argument);
  CHECK_THROWS_AS(route_values(x, SetId::B, Route::Oracle, Limit::denominator(kOracleMaxDenominator + 1)),
                  std::out_of_range);
}

TEST_CASE("a disagreement between any two routes is reported") {
  FaultGuard guard;
  const RealInput x = parse_input("sqrt(2)-1");
  for (Route faulty : {Route::Rcf, Route::Delta, Route::Oracle}) {
    INFO(to_string(faulty));
    inject_fault(faulty);
    for (SetId set : {SetId::B, SetId::B01, SetId::S1}) {
      CHECK_THROWS_AS(route_values(x, set, Route::All, Limit::denominator(50)), RouteMismatch);
    }
    inject_fault(std::nullopt);
    CHECK_NOTHROW(route_values(x, SetId::B, Route::All, Limit::denominator(50)));
  }
}

TEST_CASE("decimal inputs run every route") {
  const RealInput x = parse_input("0.41421356237309504880...");
  const auto rows = approximation_table(x, SetId::B, Route::All, Limit::denominator(1000));
  REQUIRE(rows.size() == 9);
  CHECK(rows.back().record.value == r(408, 985));
  CHECK_THROWS_AS(route_values(parse_input("0.414..."), SetId::B, Route::Rcf, Limit::denominator(100000)),
                  PrecisionExhausted);
}

TEST_CASE("every check passes on sampled inputs") {
  props::for_surds(4, [](const QuadraticSurd& x) {
    for (const CheckLine& line : verify_input(RealInput::surd(x), VerifyOptions{})) {
      INFO(line.name << ": " << line.detail);
      CHECK(line.ok);
    }
  });
  for (const CheckLine& line : verify_input(parse_input("1.7320508075688772935..."), VerifyOptions{})) {
    INFO(line.name << ": " << line.detail);
    CHECK(line.ok);
  }
}
