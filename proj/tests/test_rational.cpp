#include <doctest.h>

#include "netform/errors.hpp"
#include "netform/rational.hpp"

using netform::parse_rational;
using netform::Rational;

TEST_CASE("parse_rational accepts fractions, integers and exact decimals") {
  CHECK(parse_rational("169/4") == Rational(169, 4));
  CHECK(parse_rational("-6/4") == netform::make_rational(-3, 2));
  CHECK(parse_rational("100") == 100);
  CHECK(parse_rational("0.0059") == netform::make_rational(59, 10000));
  CHECK(parse_rational("-2.5") == netform::make_rational(-5, 2));
  CHECK(parse_rational(" 7 ") == 7);
}

TEST_CASE("parse_rational rejects malformed input") {
  for (const char* bad : {"", "1/0", "abc", "1/", "/2", "1.2.3", "1e5", "2/x"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_rational(bad), netform::ParseError);
  }
}

TEST_CASE("to_string is canonical") {
  CHECK(netform::to_string(netform::make_rational(338, 8)) == "169/4");
  CHECK(netform::to_string(Rational(3)) == "3");
  CHECK(netform::to_string(netform::make_rational(-1, 168)) == "-1/168");
}

TEST_CASE("to_decimal rounds half away from zero to fixed places") {
  CHECK(netform::to_decimal(netform::make_rational(1, 168)) == "0.0060");
  CHECK(netform::to_decimal(netform::make_rational(67, 168)) == "0.3988");
  CHECK(netform::to_decimal(netform::make_rational(169, 4)) == "42.2500");
  CHECK(netform::to_decimal(netform::make_rational(1, 20000)) == "0.0001");
  CHECK(netform::to_decimal(netform::make_rational(-1, 20000)) == "-0.0001");
  CHECK(netform::to_decimal(Rational(-3), 2) == "-3.00");
  CHECK(netform::to_decimal(netform::make_rational(-1, 300000)) == "0.0000");
}

TEST_CASE("make_rational canonicalizes") {
  const Rational r = netform::make_rational(4, 6);
  CHECK(r.get_num() == 2);
  CHECK(r.get_den() == 3);
  CHECK(netform::make_rational(4, -6) == netform::make_rational(-2, 3));
}
