#include "doctest.h"

#include "qlef/series.hpp"

#include <stdexcept>
#include <vector>

using namespace qlef;

TEST_CASE("caps silently truncate, floors reject, nilpotency kills") {
  auto vars = make_variables({{"z", 3, 0, -1}});
  RationalSeries one = RationalSeries::constant(vars, BigRational(1));
  RationalSeries z = RationalSeries::monomial(vars, Monomial{1}, BigRational(1));
  RationalSeries p = (one + z).int_pow(5);
  CHECK(p.coefficient(Monomial{0}) == 1);
  CHECK(p.coefficient(Monomial{1}) == 5);
  CHECK(p.coefficient(Monomial{2}) == 10);
  CHECK(p.coefficient(Monomial{3}) == 10);

  auto laurent = make_variables({{"z", 2, -1, -1}});
  RationalSeries zm = RationalSeries::monomial(laurent, Monomial{-1}, BigRational(1));
  CHECK_THROWS_AS(zm * zm, std::domain_error);

  auto nil = make_variables({{"H", 10, 0, 4}});
  RationalSeries h = RationalSeries::monomial(nil, Monomial{1}, BigRational(1));
  CHECK(!h.int_pow(3).is_zero());
  CHECK((h.int_pow(3) * h).is_zero());
}

TEST_CASE("inverse, exp, log are mutual inverses") {
  auto vars = make_variables({{"z", 6, 0, -1}});
  RationalSeries one = RationalSeries::constant(vars, BigRational(1));
  RationalSeries z = RationalSeries::monomial(vars, Monomial{1}, BigRational(1));

  RationalSeries geo = (one - z).inverse();
  for (int k = 0; k <= 6; ++k) CHECK(geo.coefficient(Monomial{k}) == 1);
  CHECK(geo * (one - z) == one);
  CHECK_THROWS_AS(z.inverse(), std::domain_error);

  RationalSeries f = z + z.int_pow(2).scaled(BigRational(3));
  CHECK(f.log_one_plus().exp() == one + f);
  CHECK((z.exp() * z.scaled(BigRational(-1)).exp()) == one);
  CHECK(z.exp().coefficient(Monomial{4}) == BigRational(1, 24));
  CHECK_THROWS_AS(one.exp(), std::domain_error);
  CHECK_THROWS_AS(one.log_one_plus(), std::domain_error);
}

TEST_CASE("substitution composes series") {
  auto vars = make_variables({{"z", 6, 0, -1}});
  RationalSeries one = RationalSeries::constant(vars, BigRational(1));
  RationalSeries z = RationalSeries::monomial(vars, Monomial{1}, BigRational(1));
  RationalSeries f = (one - z).inverse().substitute("z", z + z * z);
  // 1/(1 - z - z^2) has Fibonacci coefficients
  int fib[7] = {1, 1, 2, 3, 5, 8, 13};
  for (int k = 0; k <= 6; ++k) CHECK(f.coefficient(Monomial{k}) == fib[k]);
  CHECK_THROWS_AS((one - z).inverse().substitute("z", one), std::domain_error);
}

TEST_CASE("negative powers and plus-truncation") {
  auto vars = make_variables({{"w", 4, -2, -1}, {"z", 4, -2, -1}});
  RationalSeries one = RationalSeries::constant(vars, BigRational(1));
  RationalSeries s = RationalSeries::monomial(vars, Monomial{-1, 0}, BigRational(2)) +
                     RationalSeries::monomial(vars, Monomial{1, -2}, BigRational(5)) + one +
                     RationalSeries::monomial(vars, Monomial{0, 2}, BigRational(7));

  RationalSeries pz = s.plus_truncate("z");
  CHECK(pz.coefficient(Monomial{-1, 0}) == 2);
  CHECK(pz.coefficient(Monomial{1, -2}) == 0);
  CHECK(pz.coefficient(Monomial{0, 0}) == 1);
  CHECK(pz.coefficient(Monomial{0, 2}) == 7);

  RationalSeries pall = s.plus_truncate(std::vector<std::string>{"w", "z"});
  CHECK(pall.coefficient(Monomial{-1, 0}) == 0);
  CHECK(pall.coefficient(Monomial{0, 0}) == 1);
  CHECK(pall.coefficient(Monomial{0, 2}) == 7);

  CHECK(s.truncate_var("z", 1).coefficient(Monomial{0, 2}) == 0);
  CHECK(s.truncate_var("z", 1).coefficient(Monomial{-1, 0}) == 2);

  CHECK(pz.at_zero("z").coefficient(Monomial{-1, 0}) == 2);
  CHECK_THROWS_AS(s.at_zero("z"), std::domain_error);
}

TEST_CASE("rehousing between variable sets") {
  auto wide = make_variables({{"z", 6, 0, -1}});
  auto narrow = make_variables({{"z", 2, 0, -1}});
  RationalSeries z = RationalSeries::monomial(wide, Monomial{1}, BigRational(1));
  RationalSeries p = (RationalSeries::constant(wide, BigRational(1)) + z).int_pow(4);
  RationalSeries q = rehoused(p, narrow);
  CHECK(q.coefficient(Monomial{0}) == 1);
  CHECK(q.coefficient(Monomial{1}) == 4);
  CHECK(q.coefficient(Monomial{2}) == 6);
  CHECK(q.coefficient(Monomial{3}) == 0);  // dropped by the tighter cap

  auto floor0 = make_variables({{"z", 6, 0, -1}});
  auto laurent = make_variables({{"z", 6, -2, -1}});
  RationalSeries zm = RationalSeries::monomial(laurent, Monomial{-1}, BigRational(1));
  CHECK_THROWS_AS(rehoused(zm, floor0), std::domain_error);
  CHECK(rehoused(rehoused(p, laurent), wide) == p);
}

TEST_CASE("graded-lexicographic key order") {
  auto vars = make_variables({{"z", 4, 0, -1}, {"u", 4, 0, -1}});
  RationalSeries one = RationalSeries::constant(vars, BigRational(1));
  RationalSeries z = RationalSeries::monomial(vars, Monomial{1, 0}, BigRational(1));
  RationalSeries u = RationalSeries::monomial(vars, Monomial{0, 1}, BigRational(1));
  auto rows = ((one + z + u) * (one + z + u)).to_ordered_strings();
  REQUIRE(rows.size() == 6);
  CHECK(rows[0].first == "1");
  CHECK(rows[1].first == "z");
  CHECK(rows[2].first == "u");
  CHECK(rows[3].first == "z^2");
  CHECK(rows[4].first == "z*u");
  CHECK(rows[5].first == "u^2");
  CHECK(rows[3].second == "1");
  CHECK(rows[4].second == "2");

  // coefficient lookup by name with omitted names defaulting to zero
  RationalSeries zu = z * u;
  CHECK(zu.coefficient({{"z", 1}, {"u", 1}}) == 1);
  CHECK(zu.coefficient({{"z", 1}}) == 0);
}

TEST_CASE("series over the lambda function field") {
  auto vars = make_variables({{"z", 4, 0, -1}});
  LambdaSeries denom = LambdaSeries::constant(vars, LambdaRational::lambda_power(1)) +
                       LambdaSeries::monomial(vars, Monomial{1}, LambdaRational(BigRational(1)));
  LambdaSeries inv = denom.inverse();
  CHECK(inv.coefficient(Monomial{0}) == LambdaRational::lambda_power(-1));
  CHECK(inv.coefficient(Monomial{2}) == LambdaRational::lambda_power(-3));
  CHECK(inv.coefficient(Monomial{3}) ==
        LambdaRational(BigRational(-1)) * LambdaRational::lambda_power(-4));
  CHECK(denom * inv == LambdaSeries::constant(vars, LambdaRational(BigRational(1))));
}
