#include <doctest.h>

#include "indepbound/error.hpp"
#include "indepbound/numeric.hpp"
#include "../support/oracles.hpp"

using namespace indepbound;

TEST_CASE("binom and multichoose conventions") {
  CHECK(binom(5, 2) == 10);
  CHECK(binom(5, -1) == 0);
  CHECK(binom(5, 6) == 0);
  CHECK(binom(-1, 0) == 0);
  CHECK(multichoose(0, 0) == 1);
  CHECK(multichoose(0, 3) == 0);
  CHECK(multichoose(3, 2) == 6);
  for (int n = 0; n <= 20; ++n)
    for (int r = 0; r <= n; ++r) CHECK(binom(n, r) == oracle::choose(n, r));
  CHECK(factorial(20) == BigInt("2432902008176640000"));
}

TEST_CASE("parse_rational is exact") {
  CHECK(parse_rational("1/2") == rational(1, 2));
  CHECK(parse_rational("0.5") == rational(1, 2));
  CHECK(parse_rational("-3") == rational(-3));
  CHECK(parse_rational("0.125") == rational(1, 8));
  CHECK(parse_rational("08/010") == rational(4, 5));
  CHECK(parse_rational("6/4") == rational(3, 2));
  CHECK_THROWS_AS(parse_rational("1/0"), input_error);
  CHECK_THROWS_AS(parse_rational("abc"), input_error);
  CHECK_THROWS_AS(parse_rational(""), input_error);
}

TEST_CASE("to_string formats") {
  CHECK(to_string(rational(3, 6)) == "1/2");
  CHECK(to_string(rational(4)) == "4");
  CHECK(to_string(HighPrecision(1) / 3, 5) == "0.33333");
}
