#pragma once

// Dense univariate polynomials over BigRational.  Support code for the
// rational-function layer: arithmetic, division, gcd, evaluation.

#include "qlef/rational.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace qlef {

class Poly {
 public:
  Poly() = default;
  Poly(BigRational c) {  // NOLINT(google-explicit-constructor): scalars embed
    if (c != 0) coeffs_.push_back(std::move(c));
  }
  Poly(std::int64_t c) : Poly(BigRational(c)) {}  // NOLINT(google-explicit-constructor)
  explicit Poly(std::vector<BigRational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static Poly monomial(const BigRational& c, std::size_t deg) {
    if (c == 0) return {};
    std::vector<BigRational> v(deg + 1, BigRational(0));
    v[deg] = c;
    return Poly(std::move(v));
  }

  bool is_zero() const { return coeffs_.empty(); }
  // degree of the zero polynomial is -1 by convention
  std::int64_t degree() const { return static_cast<std::int64_t>(coeffs_.size()) - 1; }

  const BigRational& operator[](std::size_t i) const {
    static const BigRational kZero(0);
    return i < coeffs_.size() ? coeffs_[i] : kZero;
  }
  const std::vector<BigRational>& coeffs() const { return coeffs_; }

  const BigRational& leading() const {
    static const BigRational kZero(0);
    return coeffs_.empty() ? kZero : coeffs_.back();
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    std::vector<BigRational> v(std::max(a.coeffs_.size(), b.coeffs_.size()), BigRational(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) v[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) v[i] += b.coeffs_[i];
    return Poly(std::move(v));
  }
  friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }
  Poly operator-() const {
    std::vector<BigRational> v = coeffs_;
    for (auto& c : v) c = -c;
    return Poly(std::move(v));
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<BigRational> v(a.coeffs_.size() + b.coeffs_.size() - 1, BigRational(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return Poly(std::move(v));
  }
  friend Poly operator*(const BigRational& c, const Poly& p) { return Poly(c) * p; }

  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

  // Euclidean division: returns {quotient, remainder} with deg(r) < deg(b).
  static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    Poly q, r = a;
    while (!r.is_zero() && r.degree() >= b.degree()) {
      auto shift = static_cast<std::size_t>(r.degree() - b.degree());
      Poly t = monomial(r.leading() / b.leading(), shift);
      q += t;
      r -= t * b;
    }
    return {q, r};
  }

  friend Poly operator/(const Poly& a, const Poly& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw std::domain_error("inexact polynomial division");
    return q;
  }

  Poly derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<BigRational> v(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) v[i - 1] = BigRational(i) * coeffs_[i];
    return Poly(std::move(v));
  }

  BigRational eval(const BigRational& x) const {
    BigRational r = 0;
    for (std::size_t i = coeffs_.size(); i-- > 0;) r = r * x + coeffs_[i];
    return r;
  }

  Poly pow(std::int64_t e) const {
    if (e < 0) throw std::domain_error("negative polynomial power");
    Poly r(BigRational(1)), b = *this;
    while (e > 0) {
      if (e & 1) r *= b;
      b *= b;
      e >>= 1;
    }
    return r;
  }

  // Lowest index with a nonzero coefficient (the lambda-adic valuation);
  // zero polynomial reports -1.
  int valuation() const {
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
      if (coeffs_[i] != 0) return static_cast<int>(i);
    return -1;
  }

  // Quotient by x^k; requires valuation() >= k.
  Poly shifted_down(int k) const {
    if (k == 0) return *this;
    if (valuation() < k) throw std::domain_error("shifted_down below valuation");
    return Poly(std::vector<BigRational>(coeffs_.begin() + k, coeffs_.end()));
  }

  // Monic gcd via the Euclidean algorithm; gcd(0,0) = 0. Remainders are
  // rescaled to monic at every step: over Q this leaves the gcd unchanged and
  // keeps coefficient bit-growth polynomial instead of exponential.
  static Poly gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
      if (b.leading() != 1) b = BigRational(1) / b.leading() * b;
      a = divmod(a, b).second;
      std::swap(a, b);
    }
    if (!a.is_zero() && a.leading() != 1) {
      Poly m = BigRational(1) / a.leading() * a;
      return m;
    }
    return a;
  }

  // Render with the given variable name, descending powers, e.g. "l^2 + 3*l - 1/2".
  std::string str(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
      const BigRational& c = coeffs_[i];
      if (c == 0) continue;
      BigRational a = c < 0 ? BigRational(-c) : c;
      if (out.empty()) {
        if (c < 0) out += "-";
      } else {
        out += c < 0 ? " - " : " + ";
      }
      std::string mag = qlef::to_string(a);
      if (i == 0) {
        out += mag;
      } else {
        if (mag != "1") out += mag + "*";
        out += var;
        if (i > 1) out += "^" + std::to_string(i);
      }
    }
    return out;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }
  std::vector<BigRational> coeffs_;  // coeffs_[i] multiplies x^i; invariant: back() != 0
};

}  // namespace qlef
