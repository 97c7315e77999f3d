#pragma once

#include <vector>

#include "qlef/series.hpp"

namespace qlef {

// Everything in this module works at lambda = 1 (the graph sum is homogeneous
// in lambda, so nothing is lost) with plain rational coefficients.

// Novikov-graded coefficient families: the degree-(d1, d2) closed-form tail
// coefficients summed into a series in (q1, q2) at fixed twist index m.
enum class AbarKind { A1, A2 };

struct AbarSeries {
  AbarKind kind;
  int m;
  RationalSeries data;  // variables q1, q2
};

AbarSeries abar_series(AbarKind kind, int m, int q1cap, int q2cap);

// Coefficient of u^k in Q(z, u): (k-2+kH_k) k^{k-1} z^k / k! - g_k(kz).
RationalSeries q_vertex_weight(int k, int zcap);
// Coefficient of u^k in G(z, u): H_k k^k z^k / k! - g_k(kz).
RationalSeries g_vertex_weight(int k, int zcap);

// S_{ab,pt}(K): sum over compositions k_1+...+k_n = K (k_i >= 1) of
// sigma_pt(k_1..k_ab) * prod_{i<=ab} k_i^{k_i-1} z^{k_i}/k_i!
//             * prod_{l>ab} ((k_l-2+k_l H_{k_l}) k_l^{k_l-1} z^{k_l}/k_l! - g_{k_l}(k_l z)).
// Brute-force enumeration; the oracle for S_tree.
RationalSeries S_brute(int ab, int pt, int n, int K, int zcap);

// Same sum via the tree-function representation:
//   binom(ab, pt) [u^K] T(zu)^{ab} / (1-T(zu))^{pt} * Q(z,u)^{n-ab}.
RationalSeries S_tree(int ab, int pt, int n, int K, int zcap);

// f_{i,K}: the coefficient of (-5d)^i at total composition weight K.
// Closed form: [u^K] ((-1)^i / i!) (1-T(uz))^{m+i+1} e^{-K T(uz)}
//                    (T(zu)(1 - T(zu)/(1-T(zu))) + Q(z,u))^i,  m = 2g-4.
RationalSeries f_iK(int i, int K, int g, int zcap);
// The original quadruple sum over (n, b, p, t) built on S_brute; oracle.
RationalSeries f_iK_brute(int i, int K, int g, int zcap);

// F_{d,g}(z) by three routes that must agree:
//  r1: sum_K z^K [y^K] (1-y)^{m+2} e^{5d (1-z) G(z, y e^{-y} / z)}
//  r2: sum_K sum_i (-5d)^i f_{i,K}
//  r3: (1-z)^{2g-2-5d}
struct FdgResult {
  RationalSeries r1;
  RationalSeries r2;
  RationalSeries r3;
  bool agree = false;
};

FdgResult F_dg(int d, int g, int zcap);

// G(z, u) as a bivariate series.
RationalSeries G_series(int zcap, int ucap);

// Verifies (1-z) G(z, e^{-z}) + log(1-z) = 0 through z^M, i.e. that the
// z^m-coefficient of G(z, e^{-z}) is the harmonic number H_m.
bool harmonic_lemma_check(int M);

// sum_{i=0}^{a} (-1)^i binom(a,i) binom(b-i, c) = binom(b-a, b-c), where the
// left-hand binom(b-i, c) vanishes outside 0 <= c <= b-i and the right-hand
// side uses the falling-factorial extension (0 for c' < 0). Holds for all
// a, c >= 0 and integer b.
bool binomial_identity_point(long long a, long long b, long long c);
bool binomial_identity_check(long long amax, long long bmax, long long cmax);

// General F_{d,g} over both Novikov variables, via the compositional inverse
// h of u e^{A(u)} evaluated at 1:
//   F = (1+X)^{-(m+2)} exp( 5d (A(h1)(1-X) + B(h1)) / (1+X) ),  X = h1 A'(h1),
// with A = -sum_m Abar1(m) u^m, B = -sum_m Abar2(m) u^m. At q1 = 0 this
// collapses to (1 - q2)^{2g-2-5d}.
RationalSeries F_dg_general(int d, int g, int q1cap, int q2cap);

long long vdim_master(long long g, long long d, long long K);

// Per-cell report for the coefficient relation
//   F_{K,d3,d1,g} = (-1)^{d3} F_{K+d3,d1,g} binom(K+d3, K).
// Only d3 = 0 admits an independent evaluation path (the relation degenerates
// to an identity); d3 > 0 cells are reported unverified.
struct RelationCell {
  int K, d3, d1, g;
  bool verified;
  bool pass;
};

std::vector<RelationCell> F_Kd3_relation_check(int Kmax, int d3max, int d1max, int gmax);

}  // namespace qlef
