#include "doctest.h"
#include "paritycf/input.hpp"
#include "paritycf/rcf.hpp"
#include "props.hpp"

using namespace paritycf;

namespace {

std::size_t parse_error_position(const char* text) {
  try {
    parse_input(text);
  } catch (const ParseError& e) {
    return e.position();
  }
  FAIL("no parse error for " << text);
  return 0;
}

}  // namespace

TEST_CASE("surd literals") {
  CHECK(parse_input("sqrt(2)-1").value() == QuadraticSurd(-1, 1, 1, 2));
  CHECK(parse_input("(1+sqrt(5))/2").value() == QuadraticSurd(1, 1, 2, 5));
  CHECK(parse_input("  ( 1 + sqrt( 5 ) ) / 2 ").value() == QuadraticSurd(1, 1, 2, 5));
  CHECK(parse_input("-sqrt(2)").value() == QuadraticSurd(0, -1, 1, 2));
  CHECK(parse_input("(3-2*sqrt(7))/5").value() == QuadraticSurd(3, -2, 5, 7));
  CHECK(parse_input("sqrt(8)/2").value() == QuadraticSurd(0, 1, 1, 2));
  CHECK(parse_input("1.5+sqrt(2)").value() == QuadraticSurd(3, 2, 2, 2));
  CHECK(parse_input("1/(sqrt(2)-1)").value() == QuadraticSurd(1, 1, 1, 2));
  CHECK(parse_input("sqrt(2)-1").str() == "(-1+1*sqrt(2))/1");
  CHECK(parse_input("sqrt(2)-1").is_surd());
}

TEST_CASE("rational inputs are rejected") {
  CHECK_THROWS_AS(parse_input("sqrt(4)"), RationalInputError);
  CHECK_THROWS_AS(parse_input("0.5"), RationalInputError);
  CHECK_THROWS_AS(parse_input("3"), RationalInputError);
  CHECK_THROWS_AS(parse_input("sqrt(2)-sqrt(2)"), RationalInputError);
  CHECK_THROWS_AS(RealInput::surd(QuadraticSurd(Rational(1))), RationalInputError);
}

TEST_CASE("parse errors report offsets") {
  CHECK(parse_error_position("") == 0);
  CHECK(parse_error_position("abc") == 0);
  CHECK(parse_error_position("sqrt(2)+") == 8);
  CHECK(parse_error_position("sqrt(2") == 6);
  CHECK(parse_error_position("sqrt(-2)") == 5);
  CHECK(parse_error_position("1+sqrt(2))") == 9);
  CHECK(parse_error_position("sqrt(2)+sqrt(3)") > 0);  // two radicands
  CHECK(parse_error_position("1/0") > 0);
  CHECK(parse_error_position("0.41...+1") > 0);  // truncation only on a lone literal
}

TEST_CASE("truncated decimals are certified enclosures") {
  const RealInput x = parse_input("0.41421356...");
  CHECK_FALSE(x.is_surd());
  CHECK(x.lo() == Rational(BigInt(41421355), BigInt(100000000)));
  CHECK(x.hi() == Rational(BigInt(41421357), BigInt(100000000)));
  CHECK(x.floor() == 0);
  CHECK(x.sign_affine(1, 0) > 0);
  CHECK_THROWS_AS(x.sign_affine(BigInt(100000000), BigInt(-41421356)), PrecisionExhausted);
  CHECK(parse_input("-1.5...").floor() == -2);
  CHECK_THROWS_AS(parse_input("2.0...").floor(), PrecisionExhausted);
  CHECK(x.str() == "0.41421356...");
}

TEST_CASE("decimal enclosures certify a prefix of the expansion") {
  RcfStream exact(parse_input("sqrt(2)-1"));
  RcfStream dec(parse_input("0.41421356237309504880..."));
  std::size_t certified = 0;
  while (dec.has_term(certified)) {
    CHECK(dec.term(certified) == exact.term(certified));
    ++certified;
  }
  CHECK(certified >= 20);
  CHECK_THROWS_AS(dec.term(certified), PrecisionExhausted);
}

TEST_CASE("sample surds are deterministic and in range") {
  for (std::uint64_t i = 0; i < 300; ++i) {
    const QuadraticSurd x = sample_surd(5, i);
    CHECK(x == sample_surd(5, i));
    CHECK_FALSE(x.is_rational());
    const QuadraticSurd u = sample_unit_surd(5, i);
    CHECK(u.sign() > 0);
    CHECK(u.floor() == 0);
  }
  CHECK_FALSE(sample_surd(5, 0) == sample_surd(6, 0));
}
