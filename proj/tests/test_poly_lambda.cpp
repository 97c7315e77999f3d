#include "doctest.h"

#include "qlef/lambda_rational.hpp"
#include "qlef/poly.hpp"

#include <cstdint>
#include <stdexcept>
#include <vector>

using namespace qlef;

namespace {

Poly make(std::vector<BigRational> ascending) { return Poly(std::move(ascending)); }

}  // namespace

TEST_CASE("polynomial arithmetic") {
  Poly x = Poly::monomial(BigRational(1), 1);
  Poly p = (x + Poly(1)).pow(2);
  CHECK(p == make({BigRational(1), BigRational(2), BigRational(1)}));
  CHECK(p.degree() == 2);
  CHECK(p[0] == 1);
  CHECK(p[5] == 0);
  CHECK(p.leading() == 1);
  CHECK((p - p).is_zero());
  CHECK(Poly().degree() == -1);
  CHECK(p.derivative() == make({BigRational(2), BigRational(2)}));
  CHECK(p.eval(BigRational(3)) == 16);
  CHECK((BigRational(1, 2) * p).eval(BigRational(1)) == 2);
}

TEST_CASE("polynomial division and gcd") {
  Poly x = Poly::monomial(BigRational(1), 1);
  Poly p = (x + Poly(1)) * (x - Poly(2)) + Poly(7);
  auto [q, r] = Poly::divmod(p, x + Poly(1));
  CHECK(q == x - Poly(2));
  CHECK(r == Poly(7));
  CHECK(q * (x + Poly(1)) + r == p);
  CHECK(((x * x - Poly(1)) / (x + Poly(1))) == x - Poly(1));
  CHECK_THROWS_AS((x * x + Poly(1)) / (x + Poly(1)), std::domain_error);
  CHECK(Poly::gcd(x * x - Poly(1), x - Poly(1)) == x - Poly(1));
  // gcd is normalized monic even when inputs are scaled
  CHECK(Poly::gcd(BigRational(3) * (x - Poly(1)), BigRational(5) * (x - Poly(1))) == x - Poly(1));
  CHECK(Poly::gcd(x + Poly(2), x + Poly(3)) == Poly(1));
}

TEST_CASE("polynomial rendering") {
  CHECK(make({BigRational(-1, 2), BigRational(3), BigRational(1)}).str("l") == "l^2 + 3*l - 1/2");
  CHECK(Poly().str("l") == "0");
  CHECK(Poly(5).str("l") == "5");
  CHECK(Poly::monomial(BigRational(-1), 3).str("l") == "-l^3");
}

TEST_CASE("lambda rational normalization") {
  LambdaRational a(make({BigRational(-1), BigRational(0), BigRational(1)}),
                   make({BigRational(-1), BigRational(1)}));
  LambdaRational b(make({BigRational(1), BigRational(1)}), Poly(1));
  CHECK(a == b);  // (l^2 - 1)/(l - 1) reduces to l + 1
  CHECK(a.str() == "l + 1");
  CHECK(!a.is_zero());
  CHECK(LambdaRational().is_zero());
  CHECK(a.degree() == 1);
  CHECK(LambdaRational::lambda_power(-2).degree() == -2);
  CHECK_THROWS_AS(b.as_rational(), std::domain_error);
  CHECK(LambdaRational(BigRational(5, 3)).as_rational() == BigRational(5, 3));
  CHECK_THROWS_AS(b / LambdaRational(), std::domain_error);
  CHECK(b.eval(BigRational(2)) == 3);
  CHECK(LambdaRational::lambda_power(-2).eval(BigRational(2)) == BigRational(1, 4));
}

TEST_CASE("lambda rational field identities on sampled values") {
  std::uint64_t s = 0x9e3779b97f4a7c15ULL;
  auto next = [&]() -> std::int64_t {
    s = s * 6364136223846793005ULL + 1442695040888963407ULL;
    return static_cast<std::int64_t>((s >> 40) % 7);
  };
  auto sample = [&] {
    Poly num = make({BigRational(next() - 3), BigRational(next())});
    Poly den = Poly::monomial(BigRational(1), static_cast<int>(next() % 3)) + Poly(BigRational(next() + 1));
    return LambdaRational(num, den);
  };
  for (int t = 0; t < 60; ++t) {
    LambdaRational a = sample(), b = sample(), c = sample();
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * b == b * a);
    CHECK((a - b) + b == a);
    if (!b.is_zero()) CHECK((a / b) * b == a);
  }
}

TEST_CASE("powers") {
  LambdaRational l = LambdaRational::lambda_power(1);
  CHECK(l.pow(3) == LambdaRational::lambda_power(3));
  CHECK(l.pow(-2) == LambdaRational::lambda_power(-2));
  CHECK((l + LambdaRational(BigRational(1))).pow(2) ==
        l * l + LambdaRational(BigRational(2)) * l + LambdaRational(BigRational(1)));
  CHECK(LambdaRational(BigRational(2)).pow(0) == LambdaRational(BigRational(1)));
  CHECK_THROWS_AS(LambdaRational().pow(-1), std::domain_error);
}

TEST_CASE("expansion at infinity") {
  // l^2/(l + 1) = l - 1 + 1/l - 1/l^2 + ...
  LambdaRational f(Poly::monomial(BigRational(1), 2), make({BigRational(1), BigRational(1)}));
  CHECK(f.coeff_at_infinity(2) == 0);
  CHECK(f.coeff_at_infinity(1) == 1);
  CHECK(f.coeff_at_infinity(0) == -1);
  CHECK(f.coeff_at_infinity(-1) == 1);
  CHECK(f.coeff_at_infinity(-2) == -1);
  // 1/(l + 2) = 1/l - 2/l^2 + 4/l^3 - ...
  LambdaRational g(Poly(1), make({BigRational(2), BigRational(1)}));
  CHECK(g.coeff_at_infinity(0) == 0);
  CHECK(g.coeff_at_infinity(-1) == 1);
  CHECK(g.coeff_at_infinity(-2) == -2);
  CHECK(g.coeff_at_infinity(-3) == 4);
  CHECK(LambdaRational().coeff_at_infinity(0) == 0);
}

TEST_CASE("lambda rendering") {
  LambdaRational f(make({BigRational(1), BigRational(1)}), make({BigRational(-1), BigRational(1)}));
  CHECK(f.str() == "(l + 1)/(l - 1)");
  CHECK(LambdaRational::lambda_power(-2).str() == "1/l^2");
  CHECK(LambdaRational(BigRational(-3, 2)).str() == "-3/2");
  CHECK(LambdaRational().str() == "0");
}
