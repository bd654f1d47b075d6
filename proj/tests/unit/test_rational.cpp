#include <doctest.h>

#include "bethe/errors.hpp"
#include "bethe/rational.hpp"

using namespace bethe;

TEST_CASE("parse and print rationals") {
  CHECK(to_string(parse_rational("3")) == "3");
  CHECK(to_string(parse_rational("-6/4")) == "-3/2");
  CHECK(to_string(parse_rational(" 1.25 ")) == "5/4");
  CHECK(to_string(parse_rational("-0.5")) == "-1/2");
  CHECK(to_string(parse_rational("+7/1")) == "7");
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("abc"), ParseError);
  CHECK_THROWS_AS(parse_rational(""), ParseError);
  CHECK_THROWS_AS(parse_rational("1/-"), ParseError);
}

TEST_CASE("combinatorial helpers") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(3, 5) == 0);
  CHECK(factorial(5) == 120);
  CHECK(power(Rational(2, 3), 3) == Rational(8, 27));
  CHECK(power(Rational(2), -2) == Rational(1, 4));
  CHECK(power(Rational(7), 0) == 1);
}
