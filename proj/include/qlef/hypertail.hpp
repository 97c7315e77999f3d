#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qlef/series.hpp"

namespace qlef {

// The two distinguished torus-fixed loci of the degeneration family carrying a
// restricted I-function. Tail coefficients take values in the cohomology of
// the ambient P^4 (pulled back to the locus), so the hyperplane class H
// satisfies H^5 = 0 and H^4 survives.
enum class FixedLocus { Q0, X0 };

// Truncation orders for the hypertail computation.
//  d1  : cap on the exponent of q1 (curve class along the base direction)
//  d2  : cap on the exponent of q2 (fiber class; the Novikov direction that
//        survives the q^{gamma'} = 0 specialization)
//  z   : cap on nonnegative z-powers kept in extracted series
//  h   : top retained H-degree (H^{h+1} = 0; 4 on the ambient P^4)
//  lam : order for on-demand lambda^{-1} expansions of coefficients
struct HypertailCaps {
  int d1 = 2;
  int d2 = 6;
  int z = 6;
  int h = 4;
  int lam = 8;
};

// Restriction of the small I-function to a fixed locus, with the third curve
// direction frozen to zero and all insertion parameters t_i = 0.
struct RestrictedIFunction {
  FixedLocus locus;
  HypertailCaps caps;
  LambdaSeries data;  // variables q1, q2, z, H
};

// Tail series t(z): nonnegative z-powers only, vanishing q-constant term.
struct HypertailSeries {
  HypertailCaps caps;
  LambdaSeries data;  // variables q1, q2, z, H with z-floor 0
};

// Variable sets used by this module. The working set carries generous Laurent
// headroom in z so intermediate products never clip terms that could re-enter
// the requested window; the final set is the requested window itself.
std::shared_ptr<const VariableSet> hypertail_working_variables(const HypertailCaps& caps);
std::shared_ptr<const VariableSet> hypertail_final_variables(const HypertailCaps& caps);

// Coefficient of q1^{d1} q2^{d2} in the restricted I-function, assembled from
// the per-degree linear factors with the locus restriction applied. Exposed
// for targeted tests; i_restricted sums these into one series.
LambdaSeries i_restricted_coefficient(FixedLocus locus, const HypertailCaps& caps, int d1, int d2);

RestrictedIFunction i_restricted(FixedLocus locus, const HypertailCaps& caps);

// Multiplies by e^{-q2/z}: the change of variable that removes the spurious
// q2/z-linear summand of the restricted I-function.
LambdaSeries mirror_transform_small(const RestrictedIFunction& I);

// [zJ - z]_+ : nonnegative z-powers of zJ - z, truncated to the caps.
HypertailSeries extract_hypertail(const LambdaSeries& J, const HypertailCaps& caps);

// Closed-form coefficient families for the tail. A1/A2/Cc evaluate the
// displayed formulas verbatim; the sole normalization ambiguity is the
// exponent of m in A1 (m^{d2-2} versus m^{d2-1}), decided empirically by
// comparison with extract_hypertail. Everything is a plain rational; the
// lambda-powers are supplied by the assembly routines.
enum class A1Normalization { PowerDMinusTwo, PowerDMinusOne };

BigRational A1(long long d1, long long d2, long long m,
               A1Normalization norm = A1Normalization::PowerDMinusTwo);
BigRational A2(long long d1, long long d2, long long m);
BigRational Cc(long long d1, long long d2, long long m);

// g_m(x) = sum_{i > m} x^i / (i! (i - m)); coefficient of x^i.
BigRational g_m_coeff(long long m, long long i);

// Closed form of the tail with the third curve direction frozen (all d1 kept),
// valid through H-degree 1. Assembled from A1/A2 under the chosen
// normalization of A1.
HypertailSeries t_closed_qgammaprime0(const HypertailCaps& caps,
                                      A1Normalization norm = A1Normalization::PowerDMinusOne);

// Closed form of the tail additionally restricted to q1 = 0, through
// H-degree 1. `PowerDMinusTwo` reproduces the unnormalized display (with its
// companion coefficient slips); `PowerDMinusOne` is the variant validated
// against extract_hypertail.
HypertailSeries t_qlprime0_closed(const HypertailCaps& caps,
                                  A1Normalization norm = A1Normalization::PowerDMinusOne);

// Deterministic dump: ("d1,d2,zk,hj", lambda-rational string) pairs in
// graded-lex order of the underlying monomials.
std::vector<std::pair<std::string, std::string>> hypertail_dump(const HypertailSeries& t);

}  // namespace qlef
