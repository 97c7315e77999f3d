#include "doctest.h"

#include "qlef/loc0.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

using namespace qlef;

namespace {

const std::optional<TwistSpec> kUntwisted = std::nullopt;

LambdaRational lam_pow(long long k) { return LambdaRational::lambda_power(k); }

// Independent evaluation of psi intersection numbers by the string equation.
BigRational psi_by_string(std::vector<int> a) {
  int n = static_cast<int>(a.size());
  long long total = 0;
  for (int x : a) total += x;
  if (total != n - 3) return BigRational(0);
  if (n == 3) return BigRational(1);
  // remove one zero entry (one exists since total < n)
  for (int i = 0; i < n; ++i)
    if (a[i] == 0) {
      std::vector<int> rest = a;
      rest.erase(rest.begin() + i);
      BigRational sum(0);
      for (int j = 0; j < n - 1; ++j) {
        if (rest[j] == 0) continue;
        std::vector<int> dec = rest;
        --dec[j];
        sum += psi_by_string(dec);
      }
      return sum;
    }
  return BigRational(0);  // unreachable on-dimension
}

}  // namespace

TEST_CASE("psi intersection numbers on the genus-zero moduli") {
  CHECK(psi_integral_M0n({0, 0, 0}) == 1);
  CHECK(psi_integral_M0n({1, 0, 0, 0}) == 1);
  CHECK(psi_integral_M0n({2, 0, 0, 0, 0}) == 1);
  CHECK(psi_integral_M0n({1, 1, 0, 0, 0}) == 2);
  CHECK(psi_integral_M0n({2, 2, 0, 0, 0, 0, 0}) == BigRational(factorial(4)) / 4);
  CHECK(psi_integral_M0n({1, 0, 0}) == 0);
  CHECK_THROWS_AS(psi_integral_M0n({0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(psi_integral_M0n({-1, 1, 0}), std::invalid_argument);

  // full agreement with the string-equation recursion for n <= 6
  for (int n = 3; n <= 6; ++n) {
    std::vector<int> a(n, 0);
    while (true) {
      CHECK(psi_integral_M0n(a) == psi_by_string(a));
      int i = 0;
      while (i < n && a[i] == n - 3) a[i++] = 0;
      if (i == n) break;
      ++a[i];
    }
  }
}

TEST_CASE("builtin weight families") {
  for (int variant : {0, 1, 2}) {
    TorusWeights w = default_weights(4, variant);
    CHECK(w.N == 4);
    REQUIRE(w.weights.size() == 5);
    for (size_t i = 0; i < w.weights.size(); ++i)
      for (size_t j = i + 1; j < w.weights.size(); ++j) CHECK(w.weights[i] != w.weights[j]);
  }
  CHECK_THROWS_AS(default_weights(9, 0), std::invalid_argument);
}

TEST_CASE("fixed graph enumeration") {
  CHECK(enumerate_fixed_graphs(4, 1, 0).size() == 10);
  CHECK(enumerate_fixed_graphs(2, 1, 2).size() == 12);

  auto d2 = enumerate_fixed_graphs(1, 2, 0);
  REQUIRE(d2.size() == 3);
  int aut1 = 0, aut2 = 0, single_edges = 0;
  for (const auto& g : d2) {
    long long degsum = 0;
    for (const auto& e : g.edges) degsum += e.degree;
    CHECK(degsum == 2);
    CHECK(g.total_degree == 2);
    if (g.aut == 1) ++aut1;
    if (g.aut == 2) ++aut2;
    if (g.edges.size() == 1) {
      ++single_edges;
      CHECK(g.edges[0].degree == 2);
    }
  }
  CHECK(aut1 == 1);
  CHECK(aut2 == 2);
  CHECK(single_edges == 1);

  CHECK_THROWS_AS(enumerate_fixed_graphs(4, 4, 0), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_fixed_graphs(4, 1, 7), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_fixed_graphs(9, 1, 0), std::invalid_argument);
}

TEST_CASE("point counts on the line and plane") {
  TorusWeights w1 = default_weights(1, 0);
  CHECK(descendant_invariant_PN(1, 1, {{0, 1}, {0, 1}}, kUntwisted, w1).as_rational() == 1);
  TorusWeights w2 = default_weights(2, 0);
  CHECK(descendant_invariant_PN(2, 1, {{0, 2}, {0, 2}}, kUntwisted, w2).as_rational() == 1);
  CHECK(descendant_invariant_PN(2, 1, {{0, 1}, {0, 2}, {0, 2}}, kUntwisted, w2).as_rational() == 1);
  // generically off-dimension tuples are exactly zero
  CHECK(descendant_invariant_PN(2, 1, {{0, 1}}, kUntwisted, w2).as_rational() == 0);
  // the cube of the hyperplane class vanishes on the plane
  CHECK(descendant_invariant_PN(2, 1, {{0, 3}}, kUntwisted, w2).as_rational() == 0);
}

TEST_CASE("descendants of the small J-function on the plane") {
  TorusWeights w = default_weights(2, 0);
  CHECK(descendant_invariant_PN(2, 1, {{2, 1}}, kUntwisted, w).as_rational() == -3);
  CHECK(descendant_invariant_PN(2, 1, {{1, 2}}, kUntwisted, w).as_rational() == 1);
  CHECK(descendant_invariant_PN(2, 1, {{3, 0}}, kUntwisted, w).as_rational() == 6);
  CHECK(descendant_invariant_PN(2, 2, {{4, 2}}, kUntwisted, w).as_rational() == BigRational(1, 8));
  CHECK(descendant_invariant_PN(2, 2, {{5, 1}}, kUntwisted, w).as_rational() == BigRational(-9, 16));
  CHECK(descendant_invariant_PN(2, 2, {{6, 0}}, kUntwisted, w).as_rational() == BigRational(3, 2));
  CHECK(descendant_invariant_PN(2, 3, {{7, 2}}, kUntwisted, w).as_rational() == BigRational(1, 216));
}

TEST_CASE("twists with no cohomology act trivially") {
  TorusWeights w = default_weights(2, 0);
  TwistSpec minus_one{-1, TwistSign::Minus, true};
  CHECK(descendant_invariant_PN(2, 1, {{2, 1}}, minus_one, w) == LambdaRational(BigRational(-3)));
  TwistSpec zero_plus{0, TwistSign::Plus, true};
  CHECK(equivariant_graph_sum(2, 1, {}, zero_plus, w).is_zero());
}

TEST_CASE("euler class of the degree-five bundle counts lines") {
  TwistSpec quintic_numerator{5, TwistSign::Plus, false};
  for (int variant : {0, 1}) {
    TorusWeights w = default_weights(4, variant);
    CHECK(equivariant_graph_sum(4, 1, {}, quintic_numerator, w, true) ==
          LambdaRational(BigRational(2875)));
  }
}

TEST_CASE("weight collisions are detected, not silently wrong") {
  TorusWeights bad;
  bad.N = 2;
  bad.weights = {BigRational(0), BigRational(1), BigRational(2)};
  CHECK_THROWS_AS(equivariant_graph_sum(2, 2, {}, kUntwisted, bad), WeightCollision);
  TorusWeights dup;
  dup.N = 1;
  dup.weights = {BigRational(3), BigRational(3)};
  CHECK_THROWS_AS(equivariant_graph_sum(1, 1, {}, kUntwisted, dup), WeightCollision);
}

TEST_CASE("record bookkeeping") {
  TorusWeights w = default_weights(3, 0);
  std::vector<MarkingInsertion> ins = {MarkingInsertion::descendant(1, 1),
                                       MarkingInsertion::descendant(0, 2)};
  InvariantRecord rec = descendant_invariant_record(3, 2, ins, kUntwisted, w);
  CHECK(rec.vdim == 3 + 2 * 4 + 2 - 3);
  CHECK(rec.honest_power == 0);
  CHECK(rec.honest.is_zero());  // insertion degree 4 != vdim 10
}

TEST_CASE("chain factors of contracted edges") {
  auto vars = make_variables({{"D", 3, 0, 4}});
  EdgeFactorSeries one = EdgeFactorSeries::constant(vars, LambdaRational(BigRational(1)));
  EdgeFactorSeries D = EdgeFactorSeries::monomial(vars, Monomial{1}, LambdaRational(BigRational(1)));
  EdgeFactorSeries lamD = EdgeFactorSeries::constant(vars, lam_pow(1)) + D;

  CHECK(edge_factor(EdgeChain{{1}, {}, {}}) == one);
  CHECK(edge_factor(EdgeChain{{1}, {}, {ChainSide::D0}}) == one.scaled(-lam_pow(1)));
  CHECK(edge_factor(EdgeChain{{1}, {}, {ChainSide::D0, ChainSide::X0}}) ==
        D.scaled(-lam_pow(1)));
  // single degree-2 edge: (l - D)/(l + D)^2
  CHECK(edge_factor(EdgeChain{{2}, {}, {}}) ==
        (one.scaled(lam_pow(1)) - D) * (lamD * lamD).inverse());
  // two degree-1 edges joined over the base locus: 1/(2 (l + D)^2)
  CHECK(edge_factor(EdgeChain{{1, 1}, {ChainSide::D0}, {}}) ==
        (lamD * lamD).inverse().scaled(LambdaRational(BigRational(1, 2))));
  // joined over the hypersurface locus: the sign flips
  CHECK(edge_factor(EdgeChain{{1, 1}, {ChainSide::X0}, {}}) ==
        (lamD * lamD).inverse().scaled(LambdaRational(BigRational(-1, 2))));

  CHECK_THROWS_AS(edge_factor(EdgeChain{{}, {}, {}}), std::invalid_argument);
  CHECK_THROWS_AS(edge_factor(EdgeChain{{1, 1}, {}, {}}), std::invalid_argument);
  CHECK_THROWS_AS(edge_factor(EdgeChain{{0}, {}, {}}), std::invalid_argument);
  CHECK_THROWS_AS(
      edge_factor(EdgeChain{{1}, {}, {ChainSide::D0, ChainSide::D0, ChainSide::X0}}),
      std::invalid_argument);
}

TEST_CASE("plane conic pipeline") {
  PipelineReport rep = pipeline_p2_example();
  CHECK(rep.value == 1);
  CHECK(rep.lambda_power == -3);
  std::map<std::string, std::string> det(rep.details.begin(), rep.details.end());
  CHECK(det.at("bracket <H psi^2>") == "-3");
  CHECK(det.at("bracket <H^2 psi>") == "1");
  CHECK(det.at("bracket <H^3>") == "0");
  CHECK(det.at("weight sets agree") == "true");
  CHECK(det.at("O(0)+ term") == "0");
}
