#pragma once

// Exact integer / rational arithmetic and the small combinatorial helpers
// (factorials, binomials, harmonic numbers) used throughout the library.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>

namespace qlef {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

inline BigInt numerator(const BigRational& q) { return boost::multiprecision::numerator(q); }
inline BigInt denominator(const BigRational& q) { return boost::multiprecision::denominator(q); }

// "p" or "p/q", canonical (q > 0, gcd(p,q) = 1).
inline std::string to_string(const BigRational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

inline BigRational parse_rational(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (s.empty() || slash == 0 || slash == s.size() - 1)
      throw std::invalid_argument("empty component");
    if (slash == std::string::npos) return BigRational(BigInt(s));
    BigInt num(s.substr(0, slash));
    BigInt den(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    return BigRational(num, den);
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("bad rational literal: " + s);
  }
}

inline BigInt factorial(std::int64_t n) {
  if (n < 0) throw std::domain_error("factorial of negative integer");
  BigInt r = 1;
  for (std::int64_t i = 2; i <= n; ++i) r *= i;
  return r;
}

// 1/n!, with the reciprocal-of-(-n)! convention: zero for n < 0.
inline BigRational inv_factorial(std::int64_t n) {
  if (n < 0) return BigRational(0);
  return BigRational(BigInt(1), factorial(n));
}

// binom(n, k) for arbitrary integer n (generalized falling-factorial form),
// zero for k < 0.  For 0 <= n < k this is zero as usual.
inline BigInt binomial(std::int64_t n, std::int64_t k) {
  if (k < 0) return BigInt(0);
  BigInt num = 1;
  for (std::int64_t i = 0; i < k; ++i) num *= BigInt(n - i);
  BigInt r = num / factorial(k);  // product of k consecutive integers is divisible by k!
  return r;
}

// H_n = 1 + 1/2 + ... + 1/n, H_0 = 0.
inline BigRational harmonic(std::int64_t n) {
  if (n < 0) throw std::domain_error("harmonic number of negative index");
  BigRational h = 0;
  for (std::int64_t i = 1; i <= n; ++i) h += BigRational(BigInt(1), BigInt(i));
  return h;
}

inline BigInt int_pow(const BigInt& base, std::int64_t e) {
  if (e < 0) throw std::domain_error("negative exponent for integer power");
  BigInt r = 1, b = base;
  while (e > 0) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

inline BigRational rat_pow(const BigRational& base, std::int64_t e) {
  if (e >= 0) {
    BigRational r = 1, b = base;
    while (e > 0) {
      if (e & 1) r *= b;
      b *= b;
      e >>= 1;
    }
    return r;
  }
  if (base == 0) throw std::domain_error("negative power of zero");
  return 1 / rat_pow(base, -e);
}

// m^e with the 0^0 = 1 convention used by the combinatorial sums.
inline BigRational rat_pow0(const BigRational& base, std::int64_t e) {
  if (e == 0) return BigRational(1);
  return rat_pow(base, e);
}

}  // namespace qlef
