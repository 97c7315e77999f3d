#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qlef/series.hpp"

namespace qlef {

// T(g) = sum_{k>=1} k^{k-1} g^k / k!  for a series g with zero constant term.
// Satisfies T = g e^T when g is a single variable.
template <class S>
MultiSeries<S> tree_of(const MultiSeries<S>& g) {
  if (!ScalarTraits<S>::is_zero(g.constant_term()))
    throw std::domain_error("tree_of: argument must have zero constant term");
  MultiSeries<S> result(g.variables());
  MultiSeries<S> power = MultiSeries<S>::constant(g.variables(), ScalarTraits<S>::one());
  BigInt kfact = 1;
  for (long long k = 1; ; ++k) {
    if (k > 10000) throw std::domain_error("tree_of: series power did not terminate");
    power *= g;
    if (power.is_zero()) break;
    kfact *= k;
    result += power.scaled(BigRational(int_pow(BigInt(k), k - 1), kfact));
  }
  return result;
}

// The tree function T(x) = sum n^{n-1} x^n / n! as a univariate series.
inline RationalSeries tree_function(int cap, const std::string& var = "x") {
  auto vars = make_variables({{var, cap, 0, -1}});
  return tree_of(RationalSeries::monomial(vars, {1}, BigRational(1)));
}

// [x^k] F(T(x)) computed by Lagrange inversion:
//   [x^0] F(T) = [y^0] F,   [x^k] F(T) = [y^k] (1 - y) F(y) e^{ky}  (k >= 1).
// F is a univariate series in the named variable.
inline BigRational lagrange_coeff(const RationalSeries& F, const std::string& var, int k) {
  if (k < 0) throw std::invalid_argument("lagrange_coeff: negative order");
  size_t vi = F.variables()->index_of(var);
  Monomial e(F.variables()->size(), 0);
  if (k == 0) return F.coefficient(e);
  auto vars = F.variables();
  RationalSeries y = RationalSeries::monomial(vars, [&] {
    Monomial m(vars->size(), 0);
    m[vi] = 1;
    return m;
  }(), BigRational(1));
  RationalSeries one = RationalSeries::constant(vars, BigRational(1));
  RationalSeries eky = y.scaled(BigRational(k)).exp();
  RationalSeries full = (one - y) * F * eky;
  e[vi] = k;
  return full.coefficient(e);
}

// Partial fractions of 1/prod_{m=1}^{d} (lambda + m z):
//   sum_m c_m / (lambda + m z),  c_m = (-1)^{d-m} m^{d-1} / ((m-1)! (d-m)! lambda^{d-1}).
inline std::vector<std::pair<int, LambdaRational>> partial_fractions_lambda(int d) {
  if (d < 1) throw std::invalid_argument("partial_fractions_lambda: d must be >= 1");
  std::vector<std::pair<int, LambdaRational>> out;
  out.reserve(d);
  for (int m = 1; m <= d; ++m) {
    BigRational c(int_pow(BigInt(m), d - 1) * ((d - m) % 2 == 0 ? 1 : -1),
                  factorial(m - 1) * factorial(d - m));
    out.emplace_back(m, LambdaRational(Poly(c), Poly::monomial(BigRational(1), d - 1)));
  }
  return out;
}

// Coefficient of z^k in (lambda + m z)^{-j}: binom(j-1+k, k) (-m)^k lambda^{-j-k}.
inline LambdaRational lambda_frac_z_coeff(int m, int j, int k) {
  if (j < 1 || k < 0) throw std::invalid_argument("lambda_frac_z_coeff: bad exponents");
  BigRational c(binomial(j - 1 + k, k) * int_pow(BigInt(-m), k));
  return LambdaRational(Poly(c), Poly::monomial(BigRational(1), j + k));
}

// A z-polynomial plus a sum of elementary fractions c(lambda) (lambda + m z)^{-j}.
// The closed hypertail formulas live in this basis; the shift operator
// [z^{-1} . ]_+ acts on it exactly.
struct ElemFracTerm {
  int m = 0;
  int j = 1;
  LambdaRational coeff;
};

struct ElemFracSum {
  std::vector<LambdaRational> poly;  // poly[k] * z^k
  std::vector<ElemFracTerm> terms;

  void add_poly(int k, const LambdaRational& c) {
    if (k < 0) throw std::invalid_argument("ElemFracSum: negative z power");
    if (static_cast<int>(poly.size()) <= k) poly.resize(k + 1);
    poly[k] += c;
  }
  void add_term(int m, int j, const LambdaRational& c) {
    if (j < 1) throw std::invalid_argument("ElemFracSum: fraction power must be >= 1");
    terms.push_back({m, j, c});
  }

  void normalize() {
    std::sort(terms.begin(), terms.end(), [](const ElemFracTerm& a, const ElemFracTerm& b) {
      return std::tie(a.m, a.j) < std::tie(b.m, b.j);
    });
    std::vector<ElemFracTerm> merged;
    for (const auto& t : terms) {
      if (!merged.empty() && merged.back().m == t.m && merged.back().j == t.j)
        merged.back().coeff += t.coeff;
      else
        merged.push_back(t);
    }
    merged.erase(std::remove_if(merged.begin(), merged.end(),
                                [](const ElemFracTerm& t) { return t.coeff.is_zero(); }),
                 merged.end());
    terms = std::move(merged);
    while (!poly.empty() && poly.back().is_zero()) poly.pop_back();
  }

  std::vector<LambdaRational> z_series(int order) const {
    std::vector<LambdaRational> out(order + 1);
    for (int k = 0; k <= order && k < static_cast<int>(poly.size()); ++k) out[k] = poly[k];
    for (const auto& t : terms) {
      if (t.m == 0) {
        out[0] += t.coeff * LambdaRational::lambda_power(-t.j);
        continue;
      }
      for (int k = 0; k <= order; ++k) out[k] += t.coeff * lambda_frac_z_coeff(t.m, t.j, k);
    }
    return out;
  }

  friend bool operator==(ElemFracSum a, ElemFracSum b) {
    a.normalize();
    b.normalize();
    if (a.poly.size() != b.poly.size() || a.terms.size() != b.terms.size()) return false;
    for (size_t i = 0; i < a.poly.size(); ++i)
      if (a.poly[i] != b.poly[i]) return false;
    for (size_t i = 0; i < a.terms.size(); ++i)
      if (a.terms[i].m != b.terms[i].m || a.terms[i].j != b.terms[i].j ||
          a.terms[i].coeff != b.terms[i].coeff)
        return false;
    return true;
  }
};

// One application of f |-> [z^{-1} f]_+ on the elementary-fraction basis:
//   z^k        |-> z^{k-1}  (k >= 1),  constants drop,
//   (l+mz)^{-j} |-> -m sum_{r=1}^{j} sum_{s=0}^{r-1} C(j,r) C(r-1,s) (-1)^{r-1-s}
//                    l^{-1-s} (l+mz)^{-(j-s)}
// which for j = 1 is multiplication by -m/lambda. `power` applies it repeatedly.
inline ElemFracSum difference_operator_apply(const ElemFracSum& f, int power = 1) {
  if (power < 0) throw std::invalid_argument("difference_operator_apply: negative power");
  ElemFracSum cur = f;
  cur.normalize();
  for (int step = 0; step < power; ++step) {
    ElemFracSum next;
    for (int k = 1; k < static_cast<int>(cur.poly.size()); ++k) next.add_poly(k - 1, cur.poly[k]);
    for (const auto& t : cur.terms) {
      if (t.m == 0) continue;  // constant in z
      for (int r = 1; r <= t.j; ++r) {
        for (int s = 0; s <= r - 1; ++s) {
          BigRational c(binomial(t.j, r) * binomial(r - 1, s) *
                        BigInt(((r - 1 - s) % 2 == 0 ? 1 : -1) * -t.m));
          next.add_term(t.m, t.j - s,
                        t.coeff * LambdaRational(Poly(c), Poly::monomial(BigRational(1), 1 + s)));
        }
      }
    }
    next.normalize();
    cur = std::move(next);
  }
  return cur;
}

}  // namespace qlef
