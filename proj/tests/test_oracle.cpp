#include <set>

#include "doctest.h"
#include "paritycf/oracle.hpp"
#include "paritycf/verify.hpp"
#include "props.hpp"

using namespace paritycf;

namespace {

Rational r(long p, long q = 1) { return Rational(BigInt(p), BigInt(q)); }

const Target& root2m1() {
  static const Target t(parse_input("sqrt(2)-1"));
  return t;
}

}  // namespace

TEST_CASE("brute-force sets for sqrt(2) - 1") {
  const Target& x = root2m1();
  CHECK(brute_best(x, 12) == RationalList{r(0), r(1, 2), r(2, 5), r(5, 12)});
  CHECK(brute_signed(x, 7) == RationalList{r(0), r(1), r(1, 2), r(1, 3), r(2, 5), r(3, 7)});
  CHECK(brute_best_class(x, 7, {Sym::One}) == RationalList{r(1), r(1, 3), r(3, 7)});
  CHECK(brute_best_class(x, 5, {Sym::Zero, Sym::One}) == RationalList{r(0), r(1, 3), r(2, 5)});
  CHECK(brute_s_alpha(x, 41, Sym::Zero) == RationalList{r(1), r(3, 7), r(17, 41)});
  CHECK(brute_s_alpha(x, 1000, Sym::One).empty());
  CHECK(brute_set(x, SetId::BInf, 12) == RationalList{r(1, 2), r(5, 12)});
}

TEST_CASE("fast and exact sign tests agree") {
  const Target fast(parse_input("sqrt(2)-1"));
  const Target slow(parse_input("0.4142135623730950488016887242..."));
  auto g = props::rng(21);
  for (int i = 0; i < 2000; ++i) {
    const long q = props::uniform(g, 1, 100000);
    const long p = props::uniform(g, -5, 100000);
    CHECK(fast.sign(q, -p) == slow.sign(q, -p));
    CHECK(fast.floor_times(q) == slow.floor_times(q));
  }
  CHECK(fast.cmp_abs_err(2, 5, 3, 7) < 0);
}

TEST_CASE("oracle limits") {
  CHECK_THROWS_AS(Target(parse_input("sqrt(2)*1048576")), std::out_of_range);
  CHECK_THROWS_AS(brute_best(root2m1(), kOracleMaxDenominator + 1), std::out_of_range);
}

TEST_CASE("definitional scan agrees with the fast scan") {
  props::for_surds(15, [](const QuadraticSurd& x) { CHECK(check_definitional(RealInput::surd(x), 40).ok); });
}

TEST_CASE("S_alpha sets are disjoint and cover S minus B") {
  props::for_surds(20, [](const QuadraticSurd& x) {
    const Target t{RealInput::surd(x)};
    const RationalList B = brute_best(t, 2000), S = brute_signed(t, 2000);
    std::set<Rational> rest(S.begin(), S.end());
    for (const auto& b : B) rest.erase(b);
    std::set<Rational> seen;
    std::size_t total = 0;
    for (Sym a : kAllSyms) {
      for (const auto& v : brute_s_alpha(t, 2000, a)) {
        seen.insert(v);
        ++total;
      }
    }
    CHECK(total == seen.size());
    CHECK(seen == rest);
  });
}

TEST_CASE("lattices and parallelograms") {
  CHECK(is_primitive({2, 5}));
  CHECK_FALSE(is_primitive({2, 4}));
  CHECK(in_lattice({2, 5}, Sym::Zero));
  CHECK(in_lattice({3, 7}, Sym::One));
  CHECK(in_lattice({1, 2}, Sym::Inf));
  CHECK(in_lattice({2, 4}, Sym::Zero));  // Lambda^(0) holds non-primitive vectors too
  CHECK_FALSE(in_lattice({1, 2}, Sym::Zero));

  const Target& x = root2m1();
  // v = (2, 5): 2/5 is best, so P_B holds nothing but 0 and +-v.
  for (const Vec2& u : lattice_points(x, {2, 5}, Parallelogram::PB)) {
    CHECK(((u == Vec2{0, 0}) || (u == Vec2{2, 5}) || (u == Vec2{-2, -5})));
  }
  CHECK(parallelogram_contains(x, {2, 5}, Parallelogram::PB, {2, 5}));
  CHECK_FALSE(parallelogram_contains(x, {2, 5}, Parallelogram::PB, {1, 2}));
  // v = (1, 3): 1/3 is signed best but not best; P_B contains 1/2's vector.
  CHECK(parallelogram_contains(x, {1, 3}, Parallelogram::PB, {1, 2}));
  CHECK_FALSE(parallelogram_contains(x, {1, 3}, Parallelogram::PS, {1, 2}));
  CHECK_THROWS_AS(parallelogram_contains(x, {1, 0}, Parallelogram::PS, {0, 0}), std::invalid_argument);
}

TEST_CASE("lattice lemma for v_{2/5} and sampled vectors") {
  const ParallelogramLemmaReport one = parallelogram_lemma_check(root2m1(), {2, 5});
  CHECK(one.failures.empty());
  CHECK(one.hypothesis_i + one.hypothesis_ii >= 1);
  props::for_surds(5, [](const QuadraticSurd& x) {
    const CheckLine line = check_parallelogram_lemma(RealInput::surd(x), 200, props::seed());
    INFO(line.detail);
    CHECK(line.ok);
  });
}

TEST_CASE("parallelogram criteria reproduce the scan sets") {
  props::for_surds(8, [](const QuadraticSurd& x) {
    for (const CheckLine& line : geometric_best_check(Target(RealInput::surd(x)), 150)) {
      INFO(line.name << ": " << line.detail);
      CHECK(line.ok);
    }
  });
}
