#include "qlef/hypertail.hpp"

#include <sstream>
#include <stdexcept>

#include "qlef/special_series.hpp"

namespace qlef {

namespace {

void check_caps(const HypertailCaps& caps) {
  if (caps.d1 < 0 || caps.d2 < 0 || caps.z < 0 || caps.lam < 0)
    throw std::invalid_argument("hypertail: negative cap");
  if (caps.h < 1 || caps.h > 6) throw std::invalid_argument("hypertail: H cap out of range");
  if (caps.d1 > 8 || caps.d2 > 24 || caps.z > 64)
    throw std::invalid_argument("hypertail: cap overflow");
}

// Indices into the (q1, q2, z, H) variable sets below.
constexpr size_t kQ1 = 0, kQ2 = 1, kZ = 2, kH = 3;

Monomial mono(int a, int b, int c, int d) { return Monomial{a, b, c, d}; }

// a + b*z + c*H as a series term triple.
LambdaSeries linear_form(const std::shared_ptr<const VariableSet>& vars, const LambdaRational& a,
                         const LambdaRational& b, const LambdaRational& c) {
  LambdaSeries f(vars);
  f.add_term(mono(0, 0, 0, 0), a);
  f.add_term(mono(0, 0, 1, 0), b);
  f.add_term(mono(0, 0, 0, 1), c);
  return f;
}

// Exact Laurent inverse of (H + m z) under H-nilpotency H^{h+1} = 0:
//   1/(H + mz) = sum_{k=0}^{h} (-1)^k H^k m^{-k-1} z^{-k-1}.
// Finite, so no truncation enters; this is the z^{-1}-directed expansion rule
// for lambda-free factors.
LambdaSeries inverse_h_plus_mz(const std::shared_ptr<const VariableSet>& vars, int m, int h) {
  LambdaSeries f(vars);
  BigRational c(1, m);
  for (int k = 0; k <= h; ++k) {
    f.add_term(mono(0, 0, -k - 1, k), LambdaRational(k % 2 == 0 ? c : -c));
    c /= m;
  }
  return f;
}

}  // namespace

std::shared_ptr<const VariableSet> hypertail_working_variables(const HypertailCaps& caps) {
  check_caps(caps);
  int zcap = caps.z + caps.d2 + 4;
  int zfloor = -(5 * caps.d1 + 2 * caps.d2 + 16);
  return make_variables({{"q1", caps.d1, 0, -1},
                         {"q2", caps.d2, 0, -1},
                         {"z", zcap, zfloor, -1},
                         {"H", caps.h, 0, caps.h + 1}});
}

std::shared_ptr<const VariableSet> hypertail_final_variables(const HypertailCaps& caps) {
  check_caps(caps);
  return make_variables({{"q1", caps.d1, 0, -1},
                         {"q2", caps.d2, 0, -1},
                         {"z", caps.z, 0, -1},
                         {"H", caps.h, 0, caps.h + 1}});
}

LambdaSeries i_restricted_coefficient(FixedLocus locus, const HypertailCaps& caps, int d1,
                                      int d2) {
  check_caps(caps);
  if (d1 < 0 || d2 < 0) throw std::invalid_argument("i_restricted_coefficient: negative degree");
  auto vars = hypertail_working_variables(caps);
  const LambdaRational one(BigRational(1));
  const LambdaRational lam = LambdaRational::lambda_power(1);
  LambdaSeries f = LambdaSeries::constant(vars, one);
  if (d1 == 0 && d2 == 0) return f;

  const int M = d2 - 5 * d1;
  if (locus == FixedLocus::Q0 && M < 0) return LambdaSeries(vars);  // zero factor at m = 0

  // Down-shifting factors first, so no term ever re-enters the z-window from
  // above the cap: everything starts at z-degree <= 0 until the polynomial
  // numerators and the z-regular inverses are multiplied in.
  for (int m = 1; m <= d1; ++m)
    f *= inverse_h_plus_mz(vars, m, caps.h).int_pow(5);

  if (locus == FixedLocus::Q0) {
    f *= LambdaSeries::monomial(vars, mono(0, 0, -M, 0), LambdaRational(inv_factorial(M)));
    for (int m = 1; m <= d2; ++m)
      f *= linear_form(vars, LambdaRational(), LambdaRational(BigRational(m)),
                       LambdaRational(BigRational(5)));  // 5H + mz
    for (int m = 1; m <= d2; ++m)
      f *= linear_form(vars, lam, LambdaRational(BigRational(m)),
                       LambdaRational(BigRational(5)))  // 5H + lambda + mz
               .inverse();
  } else {
    f *= LambdaSeries::monomial(vars, mono(0, 0, -d2, 0), LambdaRational(inv_factorial(d2)));
    for (int m = 1; m <= d2; ++m)
      f *= linear_form(vars, -lam, LambdaRational(BigRational(m)), LambdaRational());  // mz - lambda
    if (M >= 0) {
      for (int m = 1; m <= M; ++m)
        f *= linear_form(vars, -lam, LambdaRational(BigRational(m)),
                         LambdaRational(BigRational(-5)))  // mz - 5H - lambda
                 .inverse();
    } else {
      // Reflected range: 1/prod_{m=1}^{M} with M < 0 is the polynomial
      // prod_{j=0}^{-M-1} of the same linear form at m = -j.
      for (int j = 0; j < -M; ++j)
        f *= linear_form(vars, -lam, LambdaRational(BigRational(-j)),
                         LambdaRational(BigRational(-5)));
    }
  }
  return f;
}

RestrictedIFunction i_restricted(FixedLocus locus, const HypertailCaps& caps) {
  check_caps(caps);
  auto vars = hypertail_working_variables(caps);
  LambdaSeries total(vars);
  for (int d1 = 0; d1 <= caps.d1; ++d1) {
    for (int d2 = 0; d2 <= caps.d2; ++d2) {
      LambdaSeries c = i_restricted_coefficient(locus, caps, d1, d2);
      if (c.is_zero()) continue;
      total += c * LambdaSeries::monomial(vars, mono(d1, d2, 0, 0), LambdaRational(BigRational(1)));
    }
  }
  return RestrictedIFunction{locus, caps, std::move(total)};
}

LambdaSeries mirror_transform_small(const RestrictedIFunction& I) {
  auto vars = I.data.variables();
  LambdaSeries arg = LambdaSeries::monomial(vars, mono(0, 1, -1, 0), LambdaRational(BigRational(-1)));
  return I.data * arg.exp();
}

HypertailSeries extract_hypertail(const LambdaSeries& J, const HypertailCaps& caps) {
  check_caps(caps);
  auto vars = J.variables();
  LambdaSeries z1 = LambdaSeries::monomial(vars, mono(0, 0, 1, 0), LambdaRational(BigRational(1)));
  LambdaSeries t = (J * z1 - z1).plus_truncate("z");
  return HypertailSeries{caps, rehoused(t.truncate_var("z", caps.z), hypertail_final_variables(caps))};
}

BigRational A1(long long d1, long long d2, long long m, A1Normalization norm) {
  if (d1 < 0 || d2 < 0 || m < 1) throw std::invalid_argument("A1: bad arguments");
  long long mpow = norm == A1Normalization::PowerDMinusTwo ? d2 - 2 : d2 - 1;
  BigRational r(binomial(5 * d1, d2 - m));
  r *= rat_pow(BigRational(m), mpow);
  r *= inv_factorial(d2 - 5 * d1);
  r *= BigRational(BigInt(1), int_pow(factorial(d1), 5));
  if ((d2 - m - 1) % 2 != 0) r = -r;
  return r;
}

BigRational Cc(long long d1, long long d2, long long m) {
  if (d1 < 0 || d2 < 0 || m < 1) throw std::invalid_argument("Cc: bad arguments");
  BigRational sum(0);
  for (long long i = 0; i <= d2 - m; ++i) {
    BigRational term = inv_factorial(i);
    term *= BigRational(binomial(d2 - i, 5 * d1));
    term *= harmonic(d2 - i);
    term *= inv_factorial(d2 - i - m);
    if (i % 2 != 0) term = -term;
    sum += term;
  }
  return sum;
}

BigRational A2(long long d1, long long d2, long long m) {
  if (d1 < 0 || d2 < 0 || m < 1) throw std::invalid_argument("A2: bad arguments");
  BigRational inner = Cc(d1, d2, m) * inv_factorial(m - 1);
  BigRational second = (BigRational(d2 - 2) - BigRational(m) * harmonic(d1)) * inv_factorial(m) *
                       inv_factorial(d2 - m) * BigRational(binomial(m, d2 - 5 * d1));
  BigRational r = inner + second;
  r *= BigRational(factorial(5 * d1), int_pow(factorial(d1), 5));
  r *= rat_pow(BigRational(m), d2 - 1);
  if ((d2 - m - 1) % 2 != 0) r = -r;
  return r;
}

BigRational g_m_coeff(long long m, long long i) {
  if (m < 1 || i < 0) throw std::invalid_argument("g_m_coeff: bad arguments");
  if (i <= m) return BigRational(0);
  return inv_factorial(i) / BigRational(i - m);
}

namespace {

// Adds c * lambda^{lampow} * q1^{d1} q2^{d2} H^{hdeg} / (lambda + m z)^{j},
// expanded in z through caps.z, into f (housed in the final variable set).
void add_frac_term(LambdaSeries& f, const HypertailCaps& caps, int d1, int d2, int hdeg, int m,
                   int j, const BigRational& c, long long lampow) {
  if (c == 0) return;
  LambdaRational scale = LambdaRational(c) * LambdaRational::lambda_power(lampow);
  for (int k = 0; k <= caps.z; ++k)
    f.add_term(Monomial{d1, d2, k, hdeg}, scale * lambda_frac_z_coeff(m, j, k));
}

}  // namespace

HypertailSeries t_closed_qgammaprime0(const HypertailCaps& caps, A1Normalization norm) {
  check_caps(caps);
  auto vars = hypertail_final_variables(caps);
  LambdaSeries f(vars);
  for (int m = 1; m <= caps.d2; ++m) {
    for (int d1 = 0; d1 <= caps.d1; ++d1) {
      for (int d2 = m; d2 <= caps.d2; ++d2) {
        BigRational a1 = A1(d1, d2, m, norm);
        BigRational a2 = A2(d1, d2, m);
        // H^0: sum over (d1, d2) of lambda^{2-d2} A1 / (lambda + mz).
        add_frac_term(f, caps, d1, d2, 0, m, 1, a1, 2 - d2);
        // H^1: -5 lambda^{1-d2} A2 / (lambda + mz) - 5 lambda^{2-d2} A1 / (lambda + mz)^2.
        add_frac_term(f, caps, d1, d2, 1, m, 1, BigRational(-5) * a2, 1 - d2);
        add_frac_term(f, caps, d1, d2, 1, m, 2, BigRational(-5) * a1, 2 - d2);
      }
    }
  }
  return HypertailSeries{caps, std::move(f)};
}

HypertailSeries t_qlprime0_closed(const HypertailCaps& caps, A1Normalization norm) {
  check_caps(caps);
  auto vars = hypertail_final_variables(caps);
  LambdaSeries f(vars);
  const bool corrected = norm == A1Normalization::PowerDMinusOne;
  for (int m = 1; m <= caps.d2; ++m) {
    BigRational c = rat_pow(BigRational(m), m - 2) * inv_factorial(m - 1);
    BigRational hm_comb = corrected ? BigRational(m) * harmonic(m) + BigRational(m - 2)
                                    : BigRational(m) * harmonic(m) - BigRational(m + 2);
    // q2^m / (lambda + mz): -c lambda^{2-m}.
    add_frac_term(f, caps, 0, m, 0, m, 1, -c, 2 - m);
    // H q2^m / (lambda + mz)^2: +5c lambda^{2-m}, or -25c in the unnormalized display.
    add_frac_term(f, caps, 0, m, 1, m, 2, (corrected ? BigRational(5) : BigRational(-25)) * c,
                  2 - m);
    // H q2^m / (lambda + mz): the harmonic-combination term.
    {
      BigRational h1 = (corrected ? BigRational(5) : BigRational(-25)) * c * hm_comb;
      add_frac_term(f, caps, 0, m, 1, m, 1, h1, 1 - m);
    }
    // ... plus the g_m series: -5H lambda g_m(m q2 / lambda) / (lambda + mz)
    // (corrected), or -5H g_m(...) / (lambda (lambda + mz)) as displayed.
    for (int i = m + 1; i <= caps.d2; ++i) {
      BigRational gi = g_m_coeff(m, i) * rat_pow(BigRational(m), i);
      long long lampow = corrected ? 1 - i : -1 - i;
      add_frac_term(f, caps, 0, i, 1, m, 1, BigRational(-5) * gi, lampow);
    }
  }
  return HypertailSeries{caps, std::move(f)};
}

std::vector<std::pair<std::string, std::string>> hypertail_dump(const HypertailSeries& t) {
  std::vector<std::pair<std::string, std::string>> out;
  out.reserve(t.data.terms().size());
  for (const auto& [e, c] : t.data.terms()) {
    std::ostringstream key;
    key << e[kQ1] << "," << e[kQ2] << "," << e[kZ] << "," << e[kH];
    out.emplace_back(key.str(), c.str());
  }
  return out;
}

}  // namespace qlef
