#include "doctest.h"
#include "paritycf/cfmaps.hpp"
#include "paritycf/verify.hpp"
#include "props.hpp"

using namespace paritycf;

namespace {

const QuadraticSurd kRoot2m1(-1, 1, 1, 2);

Rational r(long p, long q = 1) { return Rational(BigInt(p), BigInt(q)); }

}  // namespace

TEST_CASE("map names") {
  for (MapKind k : kAllMaps) CHECK(map_from_string(to_string(k)) == k);
  CHECK_FALSE(map_from_string("gauss-kuzmin").has_value());
}

TEST_CASE("single steps on sqrt(2) - 1") {
  const MapStep farey = map_step(MapKind::Farey, kRoot2m1);
  CHECK(farey.output == QuadraticSurd(0, 1, 2, 2));
  CHECK(farey.consumed == 1);
  CHECK(farey.branch == gamma_matrix(Gamma::JKJ) * reflection(Sym::Inf));

  for (MapKind k : {MapKind::Gauss, MapKind::Even, MapKind::OddOdd}) {
    const MapStep st = map_step(k, kRoot2m1);
    CHECK(st.output == kRoot2m1);
    CHECK(st.consumed == 2);
    CHECK(st.relabel == Gamma::J);
  }
  for (MapKind k : {MapKind::ByExcess, MapKind::Odd}) {
    const MapStep st = map_step(k, kRoot2m1);
    CHECK(st.output == QuadraticSurd(2, -1, 1, 2));
    CHECK(st.relabel == Gamma::KJ);
  }
  CHECK(map_step(MapKind::Gauss, kRoot2m1).m == 2);
  // The Gauss map fixes sqrt(2) - 1, so an orbit repeats one row.
  const auto orbit = map_orbit(MapKind::Gauss, kRoot2m1, 3);
  REQUIRE(orbit.size() == 3);
  CHECK(orbit[1].output == orbit[0].output);
  CHECK(orbit[2].branch == orbit[0].branch);
}

TEST_CASE("domain") {
  CHECK_THROWS_AS(map_step(MapKind::Gauss, QuadraticSurd(0, 1, 1, 2)), std::invalid_argument);
  CHECK_THROWS_AS(map_step(MapKind::Farey, QuadraticSurd(Rational(r(1, 2)))), std::invalid_argument);
  DeltaView v(std::make_shared<DeltaStream>(DeltaStream::geometric(QuadraticSurd(0, 1, 1, 2))));
  CHECK_THROWS_AS(symbolic_rule(MapKind::Gauss, v), std::invalid_argument);
}

TEST_CASE("symbolic rules read off the Delta-expression") {
  DeltaView v(std::make_shared<DeltaStream>(DeltaStream::geometric(kRoot2m1)));
  const SymbolicStep g = symbolic_rule(MapKind::Gauss, v);
  CHECK(g.m == 2);
  CHECK(g.consumed == 2);
  CHECK(symbolic_branch(v, g) == map_step(MapKind::Gauss, kRoot2m1).branch);
  const SymbolicStep oo = symbolic_rule(MapKind::OddOdd, v);
  CHECK(oo.m == 2);
  const DeltaView w = symbolic_step(MapKind::Farey, v);
  CHECK(w.offset() == 1);
}

TEST_CASE("numeric and symbolic orbits agree") {
  props::for_surds(
      10,
      [](const QuadraticSurd& x) {
        const CheckLine line = check_map_steps(x, 150);
        INFO(line.detail);
        CHECK(line.ok);
      },
      true);
}

TEST_CASE("Gauss map is the Farey map iterated a1 times") {
  props::for_surds(
      20, [](const QuadraticSurd& x) { CHECK(check_gauss_farey(x, 15).ok); }, true);
}

TEST_CASE("inverse branches recover best approximations") {
  CHECK(even_inverse_orbit(kRoot2m1, 5) == std::vector{r(0), r(1, 2), r(2, 5), r(5, 12), r(12, 29)});
  CHECK(oddodd_inverse_orbit(kRoot2m1, 5) == std::vector{r(1), r(1, 3), r(3, 7), r(7, 17), r(17, 41)});
  CHECK(even_inverse_orbit(kRoot2m1, 0).empty());
  props::for_surds(
      30,
      [](const QuadraticSurd& x) {
        const CheckLine line = check_inverse_orbits(x, 13);
        INFO(line.detail);
        CHECK(line.ok);
      },
      true);
}
