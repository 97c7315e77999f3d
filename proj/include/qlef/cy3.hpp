#pragma once

#include <utility>
#include <vector>

#include "qlef/lambda_rational.hpp"
#include "qlef/rational.hpp"
#include "qlef/series.hpp"

namespace qlef {

// Correlators on a Calabi-Yau threefold with a divisor class H restricted from
// the ambient space and a curve class of H-degree deg_H. All functions return
// the coefficient of the underlying zero-pointed invariant N_{g,class}; the
// caller carries that symbol.

// Embeds a rational scalar into the coefficient ring S.
template <class S>
S rational_scalar(const BigRational& q, const S& one);

template <>
inline BigRational rational_scalar<BigRational>(const BigRational& q, const BigRational&) {
  return q;
}

template <>
inline LambdaRational rational_scalar<LambdaRational>(const BigRational& q,
                                                      const LambdaRational&) {
  return LambdaRational(q);
}

template <>
inline RationalSeries rational_scalar<RationalSeries>(const BigRational& q,
                                                      const RationalSeries& one) {
  return one.scaled(q);
}

// Generating function of descendant correlators with m slots H psi^{k_i}
// (variables x_i), n slots psi^{l_j} (variables y_j) and N - n - m fundamental
// class slots, summed over all k, l:
//   sum_{p=0}^{n} [prod_{r=1}^{p} (2g + m + r - 4)] sigma_p(y)
//                 (sum x + sum y)^{N-m-p} deg_H^m.
// Templated over an exact commutative ring S containing the rationals; x, y
// entries may be series variables so individual invariants can be read off as
// coefficients.
template <class S>
S cy3_multi_point(int g, int N, int n, int m, const std::vector<S>& x, const std::vector<S>& y,
                  const BigRational& deg_H, const S& one) {
  if (static_cast<int>(x.size()) != m || static_cast<int>(y.size()) != n)
    throw std::invalid_argument("cy3_multi_point: slot counts disagree with x/y sizes");
  if (n + m > N) throw std::invalid_argument("cy3_multi_point: N smaller than n + m");
  S zero = one;
  zero -= one;

  // sigma_p(y) for p = 0..n by the one-variable-at-a-time recurrence.
  std::vector<S> sigma(n + 1, zero);
  sigma[0] = one;
  for (int i = 0; i < n; ++i)
    for (int p = std::min(i + 1, n); p >= 1; --p) {
      S t = sigma[p - 1];
      t *= y[i];
      sigma[p] += t;
    }

  S total_xy = zero;
  for (const S& v : x) total_xy += v;
  for (const S& v : y) total_xy += v;

  S result = zero;
  for (int p = 0; p <= n; ++p) {
    if (N - m - p < 0) continue;
    BigRational prefactor(1);
    for (int r = 1; r <= p; ++r) prefactor *= BigRational(2 * g + m + r - 4);
    if (prefactor == 0) continue;
    S term = sigma[p];
    for (int r = 0; r < N - m - p; ++r) term *= total_xy;
    term *= rational_scalar<S>(prefactor, one);
    result += term;
  }
  result *= rational_scalar<S>(rat_pow0(deg_H, m), one);
  return result;
}

// Generating function of the n-slot correlator with every slot carrying
// (t0 1 + t1 H)/(1 - z_i psi):
//   sum_{p+q+m=n} t0^{p+q} deg_H^m t1^m [prod_{r=1}^{p} (2g + m + r - 4)]
//                 C(m+q, q) sigma_p(z) (sum z)^q.
// The genus prefactor is evaluated literally as a product (it has negative
// factors for small g), never via factorials.
template <class S>
S cy3_q_vertex(int g, int n, const BigRational& deg_H, const S& t0, const S& t1,
               const std::vector<S>& z, const S& one) {
  if (static_cast<int>(z.size()) != n)
    throw std::invalid_argument("cy3_q_vertex: slot count disagrees with z size");
  S zero = one;
  zero -= one;

  std::vector<S> sigma(n + 1, zero);
  sigma[0] = one;
  for (int i = 0; i < n; ++i)
    for (int p = std::min(i + 1, n); p >= 1; --p) {
      S t = sigma[p - 1];
      t *= z[i];
      sigma[p] += t;
    }

  S total_z = zero;
  for (const S& v : z) total_z += v;

  S result = zero;
  for (int m = 0; m <= n; ++m) {
    for (int p = 0; p + m <= n; ++p) {
      int q = n - m - p;
      BigRational prefactor(1);
      for (int r = 1; r <= p; ++r) prefactor *= BigRational(2 * g + m + r - 4);
      if (prefactor == 0) continue;
      prefactor *= BigRational(binomial(m + q, q));
      prefactor *= rat_pow0(deg_H, m);
      S term = sigma[p];
      for (int r = 0; r < q; ++r) term *= total_z;
      for (int r = 0; r < p + q; ++r) term *= t0;
      for (int r = 0; r < m; ++r) term *= t1;
      term *= rational_scalar<S>(prefactor, one);
      result += term;
    }
  }
  return result;
}

// Zero-pointed twisted vertex: coefficient of N_{g,class} in
// (-1)^{1-g} lambda^{2g-2-(class . D)}.
LambdaRational twisted_zero_point(int g, long long intersection_with_D);

// One descendant insertion psi^a H^b at a marked point (0 <= b; H^4 = 0).
struct CY3Insertion {
  int a = 0;
  int b = 0;
};

// Reduces <prod psi^{a_i} H^{b_i}>_{g, n, class} to the coefficient of
// N_{g,class} using only the string, dilaton and divisor equations plus the
// dimension axiom (virtual dimension equals n on a CY3). deg_H is the
// H-degree of the curve class. Terminates: when the dimension axiom holds,
// some insertion has a + b <= 1.
BigRational cy3_reduce_by_equations(int g, const BigRational& deg_H,
                                    std::vector<CY3Insertion> insertions);

}  // namespace qlef
