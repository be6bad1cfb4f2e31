#include <doctest.h>

#include "urykat/rational.hpp"
#include "urykat/error.hpp"

using namespace urykat;

TEST_CASE("parse and format round-trip") {
  for (const char* text : {"0", "1", "-3", "1/2", "-7/3", "22/7", "1000000000000/7"}) {
    Rational r = parse_rational(text);
    CHECK(parse_rational(format_rational(r)) == r);
    CHECK(format_rational(r) == text);
  }
  CHECK(parse_rational("4/8") == rat(1, 2));
  CHECK(format_rational(parse_rational("4/8")) == "1/2");
  CHECK(parse_rational("6/3") == 2);
}

TEST_CASE("bad input is rejected") {
  for (const char* text : {"", "a", "1/0", "1/-2", "1.5", "2/", "/3", "1 /2"}) {
    CHECK_THROWS_AS(parse_rational(text), Error);
  }
}

TEST_CASE("exact arithmetic has no rounding") {
  Rational third = rat(1, 3);
  CHECK(third + third + third == 1);
  CHECK(rat(1, 10) + rat(2, 10) == rat(3, 10));
  CHECK(rat(1, 2) * rat(2, 3) == rat(1, 3));
}

TEST_CASE("step helpers") {
  CHECK(is_multiple_of_step(rat(3, 2), 2));
  CHECK(!is_multiple_of_step(rat(1, 3), 2));
  CHECK(floor_to_step(rat(5, 12), 4) == rat(1, 4));
  CHECK(floor_to_step(rat(1, 2), 2) == rat(1, 2));
  CHECK(floor_to_step(rat(-1, 3), 2) == rat(-1, 2));
}
