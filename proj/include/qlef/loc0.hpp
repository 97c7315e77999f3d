#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qlef/lambda_rational.hpp"
#include "qlef/rational.hpp"
#include "qlef/series.hpp"

namespace qlef {

// ---------------------------------------------------------------------------
// Torus data and twists
// ---------------------------------------------------------------------------

// Specialization of the (C*)^{N+1} weights acting on P^N. Weights must be
// pairwise distinct; every derived denominator is checked where it is formed
// and a degenerate choice throws WeightCollision (re-specialize and retry).
struct TorusWeights {
  int N = 0;
  std::vector<BigRational> weights;  // size N + 1
};

// Built-in specializations, collision-free for all degree <= 3 graphs on P^N
// with N <= 4: variant 0 -> k^2, variant 1 -> 5^k, variant 2 -> {0,2,7,19,41}.
TorusWeights default_weights(int N, int variant = 0);

struct WeightCollision : std::domain_error {
  using std::domain_error::domain_error;
};

enum class TwistSign { Plus, Minus };

// O(k) carrying the extra fiber scaling: Plus scales v -> l v (fiber weight
// +l), Minus scales v -> l^{-1} v (fiber weight -l); uses_lambda = false
// leaves the bundle weights unshifted.
struct TwistSpec {
  int bundle_degree = 0;
  TwistSign sign = TwistSign::Minus;
  bool uses_lambda = true;
};

// ---------------------------------------------------------------------------
// Fixed graphs
// ---------------------------------------------------------------------------

struct GraphVertex {
  int point = 0;              // fixed-point index in 0..N
  std::vector<int> markings;  // increasing subset of 0..n-1
  std::vector<int> flags;     // incident edge indices
};

struct GraphEdge {
  int a = 0;  // vertex index
  int b = 0;  // vertex index
  int degree = 1;
};

// Genus-0 decorated tree: adjacent vertices carry distinct fixed points and
// the markings partition {0..n-1}; aut is the order of the automorphism group
// of the marked decorated graph (edge-degree factors 1/k_e are separate).
struct FixedGraph {
  std::vector<GraphVertex> vertices;
  std::vector<GraphEdge> edges;
  int total_degree = 0;
  long long aut = 1;
};

// int_{M_{0,n}} psi_1^{a_1} ... psi_n^{a_n}: (n-3)!/prod a_i! when
// sum a_i = n-3, else 0. Throws for n < 3.
BigRational psi_integral_M0n(const std::vector<int>& a);

// Every isomorphism class of genus-0 degree-d fixed graph on P^N with n
// labeled markings. Resource guards: 1 <= d <= 3, 0 <= n <= 6, 1 <= N <= 8.
std::vector<FixedGraph> enumerate_fixed_graphs(int N, int d, int n);

// ---------------------------------------------------------------------------
// Descendant invariants
// ---------------------------------------------------------------------------

struct InsertionTerm {
  int psi = 0;
  int h = 0;
  LambdaRational coeff{BigRational(1)};
};

// Insertion sum_t c_t psi^{k_t} H^{b_t} at one marking, H the equivariant
// hyperplane class restricting to weight_i at the fixed point p_i.
struct MarkingInsertion {
  std::vector<InsertionTerm> terms;
  static MarkingInsertion descendant(int psi_power, int h_power);
};

// Raw Atiyah-Bott graph sum at the given weights. Pure per-graph
// contributions are accumulated by a deterministic order-independent fold.
// invert_twist replaces the twist factor by its reciprocal (an Euler-class
// numerator twist, used by cross-check oracles).
LambdaRational equivariant_graph_sum(int N, int d,
                                     const std::vector<MarkingInsertion>& insertions,
                                     const std::optional<TwistSpec>& twist,
                                     const TorusWeights& weights,
                                     bool invert_twist = false);

struct InvariantRecord {
  LambdaRational raw;     // equivariant sum at the chosen weights
  LambdaRational honest;  // weight-independent invariant (a pure lambda power)
  int vdim = 0;           // N + d(N+1) + n - 3
  int honest_power = 0;   // lambda exponent of the weight-independent part
};

InvariantRecord descendant_invariant_record(int N, int d,
                                            const std::vector<MarkingInsertion>& insertions,
                                            const std::optional<TwistSpec>& twist,
                                            const TorusWeights& weights);

// The invariant <psi^{k_1} H^{b_1}, ..., psi^{k_n} H^{b_n}>_{0,n,d} on P^N,
// optionally twisted; returns the weight-independent value (lambda symbolic
// when twist.uses_lambda, exact 0 on dimension mismatch).
LambdaRational descendant_invariant_PN(int N, int d,
                                       const std::vector<std::pair<int, int>>& insertions,
                                       const std::optional<TwistSpec>& twist,
                                       const TorusWeights& weights);

// ---------------------------------------------------------------------------
// Edge chain factor
// ---------------------------------------------------------------------------

enum class ChainSide { D0, X0 };

// A chain of edges joined at unstable inner vertices, each inner vertex lying
// on the D0 or X0 side (delta_v = +1 for D0, -1 for X0); end_stable_sides
// lists the sides of the stable chain ends entering the numerator.
struct EdgeChain {
  std::vector<int> edge_degrees;            // k_e >= 1
  std::vector<ChainSide> inner_sides;       // size |edge_degrees| - 1
  std::vector<ChainSide> end_stable_sides;  // 0..2 entries
};

// Rational function of lambda and the nilpotent divisor symbol D, expanded as
// a series in D (coefficients exact in lambda).
using EdgeFactorSeries = MultiSeries<LambdaRational>;

// Literal evaluation of the chain factor: prefactor 1/k_{e_1}, numerator
// (-lambda)^{#D0 stable ends} D^{#X0 stable ends}, inner-vertex denominators
// sum_{e' at v} delta_v (lambda+D)^2 / k_{e'}, and per-edge products
// prod_{m<k}(-lambda + (m/k)(lambda+D)) / ((-1)^{k-1} [prod_{m<k}(m/k)(lambda+D)]^2).
EdgeFactorSeries edge_factor(const EdgeChain& chain, int d_nilpotency = 4);

// ---------------------------------------------------------------------------
// Pipelines
// ---------------------------------------------------------------------------

struct PipelineReport {
  std::string name;
  BigRational value;
  int lambda_power = 0;
  std::vector<std::pair<std::string, std::string>> details;  // ordered key/value
};

// <H/(-lambda-psi-H)>_{0,1,1}^{P^2, O(-1)^-} by geometric-series expansion:
// the lambda^{-3} coefficient -(<H psi^2> + 2 <H^2 psi>) = 1, the O(0)^+
// zero-marking term 0, and the headline value <>_{0,0,1} = 1 on the line.
PipelineReport pipeline_p2_example();

// Degree-1 genus-0 count of the quintic threefold from hypertail insertions:
// sum_{n <= 5} (1/n!) <tail(-psi), ..., tail(-psi)>_{0,n,1}^{P^4, O(-5)^-}
// at the q^{5 gamma} coefficient, extracted at lambda^{-7}. Runs the
// candidate insertion normalizations and freezes the one returning 2875.
PipelineReport pipeline_quintic_degree1(bool with_degree2 = false);

}  // namespace qlef
