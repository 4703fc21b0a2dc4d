#include <map>

#include "doctest.h"
#include "paritycf/delta_sets.hpp"
#include "props.hpp"

using namespace paritycf;

namespace {

std::map<std::string, std::string> witnesses(SetId set, long q_max) {
  DeltaStream s = DeltaStream::from_rcf(RcfStream(parse_input("sqrt(2)-1")));
  std::map<std::string, std::string> out;
  for (const DeltaWitness& w : delta_set(s, set, BigInt(q_max))) out[w.value.str()] = w.word.canonical().str();
  return out;
}

std::string canon(const char* word) { return parse_delta_word(word).canonical().str(); }

}  // namespace

TEST_CASE("worked example: words for sqrt(2) - 1") {
  const auto B = witnesses(SetId::B, 12);
  CHECK(B.size() == 4);
  CHECK(B.at("0") == canon("(inf,1)*"));
  CHECK(B.at("1/2") == canon("inf,(1,0)*"));
  CHECK(B.at("2/5") == canon("inf,1,0,(1,inf)*"));
  CHECK(B.at("5/12") == canon("inf,1,0,1,inf,(1,0)*"));

  const auto S0 = witnesses(SetId::S0, 41);
  CHECK(S0.size() == 3);
  CHECK(S0.at("1") == canon("(inf,0)*"));
  CHECK(S0.at("3/7") == canon("inf,1,0,1,(inf,0)*"));
  CHECK(S0.at("17/41") == canon("inf,1,0,1,inf,1,0,1,(inf,0)*"));

  const auto Sinf = witnesses(SetId::SInf, 17);
  CHECK(Sinf.at("1/3") == canon("inf,1,(0,inf)*"));
  CHECK(Sinf.at("7/17") == canon("inf,1,0,1,inf,1,(0,inf)*"));
  CHECK(witnesses(SetId::S1, 10000).empty());

  const auto B01 = witnesses(SetId::B01, 5);
  CHECK(B01.at("0") == canon("(inf,1)*"));
  CHECK(B01.at("1/3") == canon("inf,1,(0,inf)*"));
  CHECK(B01.at("2/5") == canon("inf,1,0,(1,inf)*"));
  const auto B1inf = witnesses(SetId::B1Inf, 7);
  CHECK(B1inf.at("1") == canon("(inf,0)*"));
  CHECK(B1inf.at("1/2") == canon("inf,(1,0)*"));
  CHECK(B1inf.at("3/7") == canon("inf,1,0,1,(inf,0)*"));
}

TEST_CASE("raw witness words and indices") {
  DeltaStream s = DeltaStream::from_rcf(RcfStream(parse_input("sqrt(2)-1")));
  const auto B = delta_set(s, SetId::B, BigInt(5));
  REQUIRE(B.size() == 3);
  CHECK(B[2].word.str() == "inf,1,0,(1,inf)*");
  CHECK(B[2].m == 4);
  for (const auto& w : B) CHECK(delta_word_eval(w.word) == w.value);
}

TEST_CASE("Delta-word route equals the continued-fraction route") {
  props::for_surds(40, [](const QuadraticSurd& x) {
    const RealInput in = RealInput::surd(x);
    for (SetId set : kAllSets) {
      INFO(to_string(set));
      RcfStream r(in);
      DeltaStream d = DeltaStream::from_rcf(RcfStream(in));
      std::vector<Rational> a, b;
      for (auto& rec : rcf_set(r, set, Limit::denominator(800))) a.push_back(rec.value);
      for (auto& w : delta_set(d, set, BigInt(800))) {
        CHECK(delta_word_eval(w.word) == w.value);
        CHECK(w.m >= d.a0_abs() + 1);
        b.push_back(w.value);
      }
      CHECK(a == b);
    }
  });
}

TEST_CASE("count limits on the Delta route") {
  DeltaStream s = DeltaStream::from_rcf(RcfStream(parse_input("sqrt(2)-1")));
  const auto first = delta_set(s, SetId::B1, Limit::count(3));
  REQUIRE(first.size() == 3);
  CHECK(first[2].value == Rational(BigInt(3), BigInt(7)));
  CHECK_THROWS_AS(delta_set(s, SetId::SInf, Limit::count(1)), std::invalid_argument);
}

TEST_CASE("S-words split into B and S_delta") {
  props::for_surds(30, [](const QuadraticSurd& x) {
    const RealInput in = RealInput::surd(x);
    DeltaStream s = DeltaStream::from_rcf(RcfStream(in));
    RcfStream r(in);
    std::vector<Rational> B;
    for (auto& rec : rcf_set(r, SetId::B, Limit::denominator(100000))) B.push_back(rec.value);
    const std::size_t first = s.a0_abs().get_ui() + 1;
    for (std::size_t m = first; m < first + 12; ++m) {
      const auto v = apply_to_cusp(s.prefix_matrix(m - 1), s.symbol(m + 1));
      REQUIRE(v.has_value());
      if (v->den() > 100000) break;
      const bool in_b = std::find(B.begin(), B.end(), *v) != B.end();
      CHECK((s_gamma_split(s, m) == SignedSplit::InB) == in_b);
    }
  });
}
