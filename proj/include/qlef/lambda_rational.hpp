#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qlef/poly.hpp"

namespace qlef {

// Thrown when a series expansion is requested around a point where the
// expression is singular (e.g. z-expansion with a denominator divisible by z).
class SingularExpansion : public std::domain_error {
 public:
  explicit SingularExpansion(const std::string& what) : std::domain_error(what) {}
};

// Rational function in the scaling parameter lambda ("l" in serialized form).
// Invariants: denominator is monic and nonzero; gcd(num, den) = 1; the zero
// element is 0/1.
class LambdaRational {
 public:
  LambdaRational() : num_(), den_(BigRational(1)) {}
  LambdaRational(const BigRational& c) : num_(c), den_(BigRational(1)) {}  // NOLINT: implicit
  LambdaRational(long long c) : num_(BigRational(c)), den_(BigRational(1)) {}  // NOLINT: implicit
  LambdaRational(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

  static LambdaRational lambda_power(long long k) {
    // lambda^k for any integer k (negative k puts the power in the denominator).
    if (k >= 0) return LambdaRational(Poly::monomial(BigRational(1), k), Poly(BigRational(1)));
    return LambdaRational(Poly(BigRational(1)), Poly::monomial(BigRational(1), -k));
  }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }

  // Value as a plain rational; requires a constant (throws otherwise).
  BigRational as_rational() const {
    if (!is_constant()) throw std::domain_error("LambdaRational: not a constant");
    return num_[0] / den_[0];
  }

  LambdaRational operator-() const {
    LambdaRational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }

  LambdaRational& operator+=(const LambdaRational& o) {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
    normalize();
    return *this;
  }
  LambdaRational& operator-=(const LambdaRational& o) { return *this += (-o); }
  LambdaRational& operator*=(const LambdaRational& o) {
    num_ = num_ * o.num_;
    den_ = den_ * o.den_;
    normalize();
    return *this;
  }
  LambdaRational& operator/=(const LambdaRational& o) {
    if (o.is_zero()) throw std::domain_error("LambdaRational: division by zero");
    num_ = num_ * o.den_;
    den_ = den_ * o.num_;
    normalize();
    return *this;
  }

  friend LambdaRational operator+(LambdaRational a, const LambdaRational& b) { return a += b; }
  friend LambdaRational operator-(LambdaRational a, const LambdaRational& b) { return a -= b; }
  friend LambdaRational operator*(LambdaRational a, const LambdaRational& b) { return a *= b; }
  friend LambdaRational operator/(LambdaRational a, const LambdaRational& b) { return a /= b; }
  friend bool operator==(const LambdaRational& a, const LambdaRational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const LambdaRational& a, const LambdaRational& b) { return !(a == b); }

  LambdaRational pow(long long e) const {
    if (e < 0) {
      if (is_zero()) throw std::domain_error("LambdaRational: 0 to negative power");
      LambdaRational inv(den_, num_);
      return inv.pow(-e);
    }
    LambdaRational result(BigRational(1));
    LambdaRational base = *this;
    long long k = e;
    while (k > 0) {
      if (k & 1) result *= base;
      base *= base;
      k >>= 1;
    }
    return result;
  }

  // Evaluate at a numeric lambda; throws on a pole.
  BigRational eval(const BigRational& lambda_value) const {
    BigRational d = den_.eval(lambda_value);
    if (d == 0) throw std::domain_error("LambdaRational: evaluation at a pole");
    return num_.eval(lambda_value) / d;
  }

  // Serialized as "num" or "num/den" with lambda rendered as "l", e.g. "-1/l^2"
  // or "(l + 2)/(l^2 + 1)".
  std::string str() const;

  // Lowest lambda-degree d such that lambda^{-d} * this is regular and nonzero
  // at lambda = infinity... (deg num - deg den). Zero input throws.
  long long degree() const {
    if (is_zero()) throw std::domain_error("LambdaRational: degree of zero");
    return num_.degree() - den_.degree();
  }

  // Coefficient of lambda^k in the expansion at lambda = infinity (descending
  // powers). Exact: computed by polynomial long division carried far enough.
  BigRational coeff_at_infinity(long long k) const;

 private:
  void normalize() {
    if (den_.is_zero()) throw std::domain_error("LambdaRational: zero denominator");
    if (num_.is_zero()) {
      den_ = Poly(BigRational(1));
      return;
    }
    // Strip the common power of lambda first; afterwards the valuations are
    // coprime-in-lambda, so if either side is a pure monomial c*lambda^j the
    // gcd is exactly 1 and the Euclid run can be skipped.
    const int t = std::min(num_.valuation(), den_.valuation());
    if (t > 0) {
      num_ = num_.shifted_down(t);
      den_ = den_.shifted_down(t);
    }
    const bool num_monomial = num_.valuation() == num_.degree();
    const bool den_monomial = den_.valuation() == den_.degree();
    if (!num_monomial && !den_monomial) {
      Poly g = Poly::gcd(num_, den_);
      if (g.degree() > 0) {
        num_ = Poly::divmod(num_, g).first;
        den_ = Poly::divmod(den_, g).first;
      }
    }
    BigRational lead = den_.leading();
    if (lead != 1) {
      BigRational inv = BigRational(1) / lead;
      num_ = num_ * inv;
      den_ = den_ * inv;
    }
  }

  Poly num_;
  Poly den_;
};

// Rational function in lambda and a second variable z: num(z)/den(z) with
// lambda-polynomial coefficients. Used to expand localization factors like
// 1/(lambda + m z) as z-series with exact lambda-rational coefficients.
// Invariant: den is not the zero polynomial.
class LambdaZRational {
 public:
  // A bivariate polynomial is stored as z-coefficients, each a lambda-Poly.
  using ZPoly = std::vector<Poly>;

  LambdaZRational(ZPoly num, ZPoly den) : num_(std::move(num)), den_(std::move(den)) {
    trim(num_);
    trim(den_);
    if (den_.empty()) throw std::domain_error("LambdaZRational: zero denominator");
  }

  static LambdaZRational from_constant(const LambdaRational& c) {
    return LambdaZRational(ZPoly{c.num()}, ZPoly{c.den()});
  }

  // a + b*z with lambda-polynomial a, b; e.g. linear_in_z(lambda, m) = lambda + m z.
  static LambdaZRational linear_in_z(const Poly& a, const Poly& b) {
    return LambdaZRational(ZPoly{a, b}, ZPoly{Poly(BigRational(1))});
  }

  const ZPoly& num() const { return num_; }
  const ZPoly& den() const { return den_; }

  LambdaZRational operator*(const LambdaZRational& o) const {
    return LambdaZRational(mul(num_, o.num_), mul(den_, o.den_));
  }
  LambdaZRational operator/(const LambdaZRational& o) const {
    if (o.num_.empty()) throw std::domain_error("LambdaZRational: division by zero");
    return LambdaZRational(mul(num_, o.den_), mul(den_, o.num_));
  }

  // Coefficients c_0..c_order of the z-expansion; throws SingularExpansion when
  // den(z=0) = 0 as a lambda-polynomial.
  std::vector<LambdaRational> z_series(int order) const;

 private:
  static void trim(ZPoly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
  }
  static ZPoly mul(const ZPoly& a, const ZPoly& b) {
    if (a.empty() || b.empty()) return {};
    ZPoly r(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i)
      for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    trim(r);
    return r;
  }

  ZPoly num_;
  ZPoly den_;
};

enum class LambdaExpandMode { InvLambda, ZSeries };

// Expansion of r at lambda = infinity: coefficients of lambda^{-k} for
// k = k_min..order where k_min = -(deg num - deg den) can be negative
// (polynomial part). Returned as (exponent of 1/lambda, coefficient) pairs in
// ascending exponent order, zero coefficients omitted.
std::vector<std::pair<long long, BigRational>> lambda_expand_inv(const LambdaRational& r,
                                                                 int order);

// z-series coefficients c_0..c_order of a bivariate rational function, each an
// exact LambdaRational. Throws SingularExpansion when the denominator vanishes
// at z = 0.
std::vector<LambdaRational> lambda_expand_z(const LambdaZRational& r, int order);

std::string to_string(const LambdaRational& r);

}  // namespace qlef
