#include "doctest.h"

#include "qlef/special_series.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

using namespace qlef;

TEST_CASE("tree function coefficients and functional equation") {
  RationalSeries T = tree_function(10);
  CHECK(T.coefficient(Monomial{0}) == 0);
  CHECK(T.coefficient(Monomial{1}) == 1);
  CHECK(T.coefficient(Monomial{2}) == 1);
  CHECK(T.coefficient(Monomial{3}) == BigRational(3, 2));
  CHECK(T.coefficient(Monomial{5}) == BigRational(625, 120));
  CHECK(T.coefficient(Monomial{10}) == BigRational(BigInt("1000000000"), factorial(10)));

  RationalSeries x = RationalSeries::monomial(T.variables(), Monomial{1}, BigRational(1));
  CHECK(x * T.exp() == T);

  CHECK_THROWS_AS(tree_of(RationalSeries::constant(T.variables(), BigRational(1))),
                  std::domain_error);
}

TEST_CASE("lagrange inversion equals direct composition") {
  auto vars = make_variables({{"y", 8, 0, -1}});
  RationalSeries one = RationalSeries::constant(vars, BigRational(1));
  RationalSeries y = RationalSeries::monomial(vars, Monomial{1}, BigRational(1));
  RationalSeries T = tree_of(y);

  std::vector<RationalSeries> cases = {y.exp(), (one - y).inverse().int_pow(2),
                                       one + y.scaled(BigRational(3)) + y.int_pow(3)};
  for (const auto& F : cases) {
    RationalSeries comp = F.substitute("y", T);
    for (int k = 0; k <= 8; ++k) CHECK(lagrange_coeff(F, "y", k) == comp.coefficient(Monomial{k}));
  }
  CHECK_THROWS_AS(lagrange_coeff(y, "y", -1), std::invalid_argument);
}

TEST_CASE("partial fractions recombine to the product inverse") {
  auto vars = make_variables({{"z", 6, 0, -1}});
  for (int d = 1; d <= 8; ++d) {
    auto pf = partial_fractions_lambda(d);
    REQUIRE(pf.size() == static_cast<size_t>(d));

    LambdaSeries prod = LambdaSeries::constant(vars, LambdaRational(BigRational(1)));
    for (int m = 1; m <= d; ++m)
      prod *= LambdaSeries::constant(vars, LambdaRational::lambda_power(1)) +
              LambdaSeries::monomial(vars, Monomial{1}, LambdaRational(BigRational(m)));
    LambdaSeries direct = prod.inverse();

    for (int k = 0; k <= 6; ++k) {
      LambdaRational s;
      for (const auto& [m, c] : pf) s += c * lambda_frac_z_coeff(m, 1, k);
      CHECK(s == direct.coefficient(Monomial{k}));
    }
  }
}

TEST_CASE("elementary fraction expansion coefficients") {
  CHECK(lambda_frac_z_coeff(2, 1, 0) == LambdaRational::lambda_power(-1));
  CHECK(lambda_frac_z_coeff(2, 1, 1) ==
        LambdaRational(BigRational(-2)) * LambdaRational::lambda_power(-2));
  CHECK(lambda_frac_z_coeff(3, 2, 2) ==
        LambdaRational(BigRational(27)) * LambdaRational::lambda_power(-4));
  CHECK_THROWS_AS(lambda_frac_z_coeff(1, 0, 0), std::invalid_argument);
}

TEST_CASE("shift operator on elementary fractions") {
  // one application on 1/(l + 3z) multiplies by -3/l
  ElemFracSum f;
  f.add_term(3, 1, LambdaRational(BigRational(1)));
  ElemFracSum once = difference_operator_apply(f);
  ElemFracSum expect1;
  expect1.add_term(3, 1, LambdaRational(Poly(BigRational(-3)), Poly::monomial(BigRational(1), 1)));
  CHECK(once == expect1);

  // two applications on 1/(l + mz) give (m^2/l^2) / (l + mz)
  for (int m = 1; m <= 4; ++m) {
    ElemFracSum g;
    g.add_term(m, 1, LambdaRational(BigRational(1)));
    ElemFracSum want;
    want.add_term(m, 1,
                  LambdaRational(Poly(BigRational(m * m)), Poly::monomial(BigRational(1), 2)));
    CHECK(difference_operator_apply(g, 2) == want);
  }

  // polynomial part shifts down and constants drop
  ElemFracSum p;
  p.add_poly(0, LambdaRational(BigRational(7)));
  p.add_poly(2, LambdaRational(BigRational(1, 3)));
  ElemFracSum pshift = difference_operator_apply(p);
  ElemFracSum pwant;
  pwant.add_poly(1, LambdaRational(BigRational(1, 3)));
  CHECK(pshift == pwant);

  // on any mixed element, the closed action agrees with shifting the z-expansion
  ElemFracSum mix;
  mix.add_poly(0, LambdaRational(BigRational(7)));
  mix.add_poly(2, LambdaRational(BigRational(1, 3)));
  mix.add_term(2, 2, LambdaRational(BigRational(5)));
  mix.add_term(1, 1, LambdaRational::lambda_power(1));
  mix.add_term(0, 3, LambdaRational(BigRational(2)));
  for (int power = 1; power <= 3; ++power) {
    auto shifted = difference_operator_apply(mix, power).z_series(5);
    auto base = mix.z_series(5 + power);
    for (int k = 0; k <= 5; ++k) CHECK(shifted[k] == base[k + power]);
  }
}
