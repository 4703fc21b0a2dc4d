#include <set>

#include "doctest.h"
#include "paritycf/parity_best.hpp"
#include "paritycf/verify.hpp"
#include "props.hpp"

using namespace paritycf;

namespace {

Rational r(long p, long q = 1) { return Rational(BigInt(p), BigInt(q)); }

std::vector<Rational> values(const char* x, SetId set, const Limit& limit) {
  RcfStream s(parse_input(x));
  std::vector<Rational> out;
  for (auto& rec : rcf_set(s, set, limit)) out.push_back(rec.value);
  return out;
}

std::vector<Rational> upto(const char* x, SetId set, long q) { return values(x, set, Limit::denominator(q)); }

ApproxRecord record_of(const char* x, const Rational& v) {
  RcfStream s(parse_input(x));
  for (auto& rec : signed_records(s, v.den())) {
    if (rec.value == v) return rec;
  }
  FAIL("no record for " << v.str());
  return {};
}

}  // namespace

TEST_CASE("set names") {
  for (SetId s : kAllSets) CHECK(set_from_string(to_string(s)) == s);
  CHECK(to_string(pair_set(Sym::Inf, Sym::Zero)) == "B0inf");
  CHECK(to_string(class_set(Sym::One)) == "B1");
  CHECK(to_string(s_alpha_set(Sym::Inf)) == "Sinf");
  CHECK(set_labels(SetId::B01) == std::vector<Sym>{Sym::Zero, Sym::One});
  CHECK_FALSE(set_from_string("B10").has_value());
}

TEST_CASE("golden sets for sqrt(2) - 1") {
  const char* x = "sqrt(2)-1";
  CHECK(upto(x, SetId::B, 12) == std::vector{r(0), r(1, 2), r(2, 5), r(5, 12)});
  CHECK(upto(x, SetId::S0, 41) == std::vector{r(1), r(3, 7), r(17, 41)});
  CHECK(upto(x, SetId::SInf, 17) == std::vector{r(1, 3), r(7, 17)});
  CHECK(upto(x, SetId::S1, 1000).empty());
  CHECK(upto(x, SetId::B0, 29) == std::vector{r(0), r(2, 5), r(12, 29)});
  CHECK(upto(x, SetId::B1, 7) == std::vector{r(1), r(1, 3), r(3, 7)});
  CHECK(upto(x, SetId::BInf, 12) == std::vector{r(1, 2), r(5, 12)});
  CHECK(upto(x, SetId::B01, 5) == std::vector{r(0), r(1, 3), r(2, 5)});
  CHECK(upto(x, SetId::B0Inf, 5) == std::vector{r(0), r(1, 2), r(2, 5)});
  CHECK(upto(x, SetId::B1Inf, 7) == std::vector{r(1), r(1, 2), r(3, 7)});
  CHECK(values(x, SetId::B1, Limit::count(3)) == std::vector{r(1), r(1, 3), r(3, 7)});
  CHECK(values(x, SetId::B0, Limit::count(0)).empty());
}

TEST_CASE("3/7 is signed best and (0,1)-rational but not a best (0,1)-approximation") {
  const std::vector<Rational> S = upto("sqrt(2)-1", SetId::S, 7);
  const std::vector<Rational> B01 = upto("sqrt(2)-1", SetId::B01, 7);
  CHECK(std::find(S.begin(), S.end(), r(3, 7)) != S.end());
  CHECK(parity_of(r(3, 7)) == Sym::One);
  CHECK(std::find(B01.begin(), B01.end(), r(3, 7)) == B01.end());
  // Witness: |5x - 2| < |7x - 3|.
  const RealInput x = parse_input("sqrt(2)-1");
  const QuadraticSurd e5 = (QuadraticSurd::integer(5) * x.value() - QuadraticSurd::integer(2)).abs();
  const QuadraticSurd e7 = (QuadraticSurd::integer(7) * x.value() - QuadraticSurd::integer(3)).abs();
  CHECK(e5 < e7);
}

TEST_CASE("a1 = 1: p0 is signed best but not best") {
  const char* phi = "(1+sqrt(5))/2";
  const ApproxRecord p0 = record_of(phi, r(1));
  CHECK(p0.kind == Kind::Principal);
  CHECK(p0.n == 0);
  CHECK(p0.in_S);
  CHECK_FALSE(p0.in_B);
  REQUIRE(p0.s_class.has_value());
  CHECK(*p0.s_class == parity_of(r(2)));  // the class of a0 + 1
  CHECK(upto(phi, SetId::B, 5) == std::vector{r(2), r(3, 2), r(5, 3), r(8, 5)});
  // a0 and a0 + 1 share the denominator 1 and are ordered by numerator.
  CHECK(upto(phi, SetId::S, 1) == std::vector{r(1), r(2)});
  RcfStream s(parse_input(phi));
  CHECK(p0_memberships(s) == p0.memberships);
  RcfStream t(parse_input("sqrt(2)"));
  CHECK_THROWS_AS(p0_memberships(t), std::invalid_argument);
}

TEST_CASE("records carry the continued-fraction classification") {
  const ApproxRecord third = record_of("sqrt(2)-1", r(1, 3));
  CHECK(third.kind == Kind::Intermediate);
  CHECK(third.n == 2);
  CHECK(third.k == 1);
  CHECK(third.parity == Sym::One);
  CHECK_FALSE(third.in_B);
  CHECK(third.s_class == Sym::Inf);
  CHECK(record_in(third, SetId::B1));
  CHECK(record_in(third, SetId::SInf));
  CHECK_FALSE(record_in(third, SetId::B0Inf));
}

TEST_CASE("explicit intermediate rules, even k") {
  // x = [0; 3, 3, 3, ...]: every a_n = 3 gives intermediates with k = 1, 2.
  const char* x = "(-3+sqrt(13))/2";
  RcfStream s(parse_input(x));
  bool saw_even = false;
  for (const ApproxRecord& rec : signed_records(s, BigInt(5000))) {
    if (rec.kind != Kind::Intermediate) continue;
    saw_even = saw_even || rec.k == 2;
    CHECK(intermediate_memberships(s, rec.n, rec.k) == rec.memberships);
  }
  CHECK(saw_even);
  CHECK(check_set_identities(parse_input(x), BigInt(5000)).ok);
  CHECK_THROWS_AS(intermediate_memberships(s, 1, 3), std::invalid_argument);
}

TEST_CASE("partition and intersection identities on samples") {
  props::for_surds(50, [](const QuadraticSurd& x) {
    const CheckLine line = check_set_identities(RealInput::surd(x), BigInt(1000));
    INFO(line.detail);
    CHECK(line.ok);
  });
}

TEST_CASE("count limits") {
  CHECK(values("sqrt(2)-1", SetId::B0, Limit::count(3)) == std::vector{r(0), r(2, 5), r(12, 29)});
  CHECK(values("sqrt(3)", SetId::B, Limit::count(4)).size() == 4);
  CHECK_THROWS_AS(values("sqrt(2)-1", SetId::S0, Limit::count(2)), std::invalid_argument);
  props::for_surds(20, [](const QuadraticSurd& x) {
    const RealInput in = RealInput::surd(x);
    for (SetId set : {SetId::B, SetId::S, SetId::B0, SetId::B1Inf}) {
      RcfStream s(in);
      const auto first = rcf_set(s, set, Limit::count(6));
      REQUIRE(first.size() == 6);
      const auto all = rcf_set(s, set, Limit::denominator(first.back().value.den()));
      REQUIRE(all.size() >= 6);
      for (std::size_t i = 0; i < 6; ++i) CHECK(all[i].value == first[i].value);
    }
  });
}
