#include "qlef/quintic_oracle.hpp"

#include <array>
#include <stdexcept>

#include "qlef/series.hpp"

namespace qlef {

namespace {

// prod_{m=1}^{5d}(m + 5H) / prod_{m=1}^{d}(m + H)^5 mod H^4, as the four
// coefficients of 1, H, H^2, H^3.
std::array<BigRational, 4> hypergeometric_coefficient(int d) {
  std::array<BigRational, 4> num{BigRational(1), 0, 0, 0};
  std::array<BigRational, 4> den{BigRational(1), 0, 0, 0};
  auto mul_linear = [](std::array<BigRational, 4>& p, const BigRational& c0,
                       const BigRational& c1) {
    for (int i = 3; i >= 0; --i) {
      BigRational t = p[i] * c0;
      if (i > 0) t += p[i - 1] * c1;
      p[i] = t;
    }
  };
  for (int m = 1; m <= 5 * d; ++m) mul_linear(num, BigRational(m), BigRational(5));
  for (int m = 1; m <= d; ++m)
    for (int r = 0; r < 5; ++r) mul_linear(den, BigRational(m), BigRational(1));
  // num * den^{-1} mod H^4; den[0] != 0.
  std::array<BigRational, 4> inv{BigRational(1) / den[0], 0, 0, 0};
  for (int i = 1; i < 4; ++i) {
    BigRational s = 0;
    for (int j = 1; j <= i; ++j) s += den[j] * inv[i - j];
    inv[i] = -s / den[0];
  }
  std::array<BigRational, 4> out{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; i + j < 4; ++j) out[i + j] += num[i] * inv[j];
  return out;
}

}  // namespace

QuinticNumbers quintic_mirror_numbers(int dmax) {
  if (dmax < 1 || dmax > 12)
    throw std::invalid_argument("quintic_mirror_numbers: dmax out of range [1,12]");
  auto vars = make_variables({{"q", dmax}});
  RationalSeries i0(vars), i1(vars), i2(vars);
  for (int d = 0; d <= dmax; ++d) {
    auto c = hypergeometric_coefficient(d);
    i0.add_term({d}, c[0]);
    i1.add_term({d}, c[1]);
    i2.add_term({d}, c[2]);
  }
  RationalSeries i0_inv = i0.inverse();
  RationalSeries f = i1 * i0_inv;                       // mirror map, no constant term
  RationalSeries psi = (i2 * i0_inv - (f * f).scaled(BigRational(1, 2))).scaled(BigRational(5));

  QuinticNumbers result;
  result.N.assign(dmax + 1, BigRational(0));
  result.n.assign(dmax + 1, BigRational(0));
  // psi = sum_d d N_d q^d e^{dF}: peel off degrees in increasing order.
  std::vector<RationalSeries> exp_dF;
  exp_dF.reserve(dmax + 1);
  for (int d = 0; d <= dmax; ++d) exp_dF.push_back(f.scaled(BigRational(d)).exp());
  for (int d = 1; d <= dmax; ++d) {
    BigRational s = psi.coefficient(Monomial{d});
    for (int e = 1; e < d; ++e)
      s -= BigRational(e) * result.N[e] * exp_dF[e].coefficient(Monomial{d - e});
    result.N[d] = s / d;
  }
  for (int d = 1; d <= dmax; ++d) {
    BigRational s = result.N[d];
    for (int k = 2; k <= d; ++k)
      if (d % k == 0) s -= result.n[d / k] / (BigRational(k) * k * k);
    result.n[d] = s;
  }
  return result;
}

}  // namespace qlef
