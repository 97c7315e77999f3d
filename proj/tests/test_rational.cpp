#include "doctest.h"

#include "qlef/rational.hpp"

#include <stdexcept>

using namespace qlef;

TEST_CASE("rational string round trip") {
  CHECK(to_string(BigRational(3, 4)) == "3/4");
  CHECK(to_string(BigRational(-7)) == "-7");
  CHECK(to_string(BigRational(0)) == "0");
  CHECK(parse_rational("3/4") == BigRational(3, 4));
  CHECK(parse_rational("-6/4") == BigRational(-3, 2));
  CHECK(parse_rational("12") == BigRational(12));
  CHECK(parse_rational("-0") == BigRational(0));
  CHECK_THROWS_AS(parse_rational("5/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
}

TEST_CASE("factorials") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(1) == 1);
  CHECK(factorial(5) == 120);
  CHECK(factorial(20) == BigInt("2432902008176640000"));
  CHECK_THROWS_AS(factorial(-1), std::domain_error);
  CHECK(inv_factorial(-2) == 0);
  CHECK(inv_factorial(0) == 1);
  CHECK(inv_factorial(4) == BigRational(1, 24));
}

TEST_CASE("generalized binomial coefficients") {
  CHECK(binomial(4, 2) == 6);
  CHECK(binomial(4, 0) == 1);
  CHECK(binomial(4, 7) == 0);
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(5, -1) == 0);
  // negative upper index: C(-3,2) = (-3)(-4)/2 = 6
  CHECK(binomial(-3, 2) == 6);
  CHECK(binomial(-1, 3) == -1);

  // Pascal's rule holds on the whole integer grid with the k<0 convention.
  for (std::int64_t n = -5; n <= 20; ++n)
    for (std::int64_t k = -2; k <= 20; ++k)
      CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
}

TEST_CASE("harmonic numbers") {
  CHECK(harmonic(0) == 0);
  CHECK(harmonic(1) == 1);
  CHECK(harmonic(2) == BigRational(3, 2));
  CHECK(harmonic(4) == BigRational(25, 12));
  CHECK_THROWS_AS(harmonic(-1), std::domain_error);
}

TEST_CASE("integer and rational powers") {
  CHECK(int_pow(BigInt(3), 4) == 81);
  CHECK(int_pow(BigInt(0), 0) == 1);
  CHECK(int_pow(BigInt(-2), 3) == -8);
  CHECK(rat_pow(BigRational(2, 3), 2) == BigRational(4, 9));
  CHECK(rat_pow(BigRational(1, 2), -3) == 8);
  CHECK_THROWS_AS(rat_pow(BigRational(0), -1), std::domain_error);
  CHECK(rat_pow0(BigRational(0), 0) == 1);
  CHECK(rat_pow0(BigRational(0), 3) == 0);
  CHECK(rat_pow0(BigRational(-1, 2), 2) == BigRational(1, 4));
}
