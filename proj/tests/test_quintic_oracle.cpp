#include "doctest.h"

#include "qlef/quintic_oracle.hpp"

#include <stdexcept>

using namespace qlef;

TEST_CASE("hypergeometric mirror numbers for the quintic") {
  QuinticNumbers q = quintic_mirror_numbers(4);
  REQUIRE(q.N.size() == 5);
  REQUIRE(q.n.size() == 5);
  CHECK(q.N[0] == 0);
  CHECK(q.n[0] == 0);
  CHECK(q.N[1] == 2875);
  CHECK(q.n[1] == 2875);
  CHECK(q.N[2] == BigRational(4876875, 8));
  CHECK(q.n[2] == 609250);
  CHECK(q.N[3] == BigRational(BigInt("8564575000"), BigInt(27)));
  CHECK(q.n[3] == 317206375);
  CHECK(q.n[4] == BigRational(BigInt("242467530000")));

  // multiple-cover relation: N_4 = n_4 + n_2/2^3 + n_1/4^3
  CHECK(q.N[4] == q.n[4] + q.n[2] / 8 + q.n[1] / 64);
}

TEST_CASE("degree guard") {
  CHECK_THROWS_AS(quintic_mirror_numbers(0), std::invalid_argument);
  CHECK_THROWS_AS(quintic_mirror_numbers(13), std::invalid_argument);
}
