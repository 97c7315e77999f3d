#include "qlef/verify.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "qlef/cy3.hpp"
#include "qlef/genfun.hpp"
#include "qlef/hypertail.hpp"
#include "qlef/lambda_rational.hpp"
#include "qlef/loc0.hpp"
#include "qlef/rational.hpp"
#include "qlef/series.hpp"
#include "qlef/special_series.hpp"

namespace qlef {

namespace {

void push(std::vector<CriterionResult>& out, const std::string& id, const std::string& desc,
          const std::string& expected, const std::string& got) {
  out.push_back({id, desc, expected, got, expected == got});
}

// Splitmix-style deterministic generator for the seeded weight specialization.
struct Lcg {
  std::uint64_t s;
  explicit Lcg(unsigned seed) : s(static_cast<std::uint64_t>(seed) + 0x9e3779b97f4a7c15ULL) {}
  std::uint64_t next() {
    s += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = s;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
};

TorusWeights seeded_weights(int N, Lcg& rng) {
  std::set<long long> used;
  std::vector<BigRational> ws;
  while (static_cast<int>(ws.size()) < N + 1) {
    long long v = static_cast<long long>(rng.next() % 51) - 25;
    if (used.insert(v).second) ws.emplace_back(v);
  }
  return TorusWeights{N, ws};
}

// ---------------------------------------------------------------------------
// Criterion 1: the two-fixed-point example
// ---------------------------------------------------------------------------

void run_p2(std::vector<CriterionResult>& out) {
  TorusWeights w = default_weights(2, 0);
  LambdaRational b1 = descendant_invariant_PN(2, 1, {{2, 1}}, std::nullopt, w);
  push(out, "p2.bracket-psi2H", "<psi^2 H>_{0,1,1} on P^2", "-3", to_string(b1.as_rational()));
  LambdaRational b2 = descendant_invariant_PN(2, 1, {{1, 2}}, std::nullopt, w);
  push(out, "p2.bracket-psiH2", "<psi H^2>_{0,1,1} on P^2", "1", to_string(b2.as_rational()));
  PipelineReport rep = pipeline_p2_example();
  push(out, "p2.pipeline", "restriction pipeline on the P^2 line count", "1", to_string(rep.value));
}

// ---------------------------------------------------------------------------
// Criterion 2: degree-1 quintic count
// ---------------------------------------------------------------------------

void run_quintic1(std::vector<CriterionResult>& out) {
  PipelineReport rep = pipeline_quintic_degree1(false);
  push(out, "quintic1.count", "degree-1 rational curves on the quintic threefold", "2875",
       to_string(rep.value));
}

// ---------------------------------------------------------------------------
// Criterion 3: F_{d,g} closed form
// ---------------------------------------------------------------------------

void run_fdg(std::vector<CriterionResult>& out) {
  std::ostringstream bad;
  for (int d = 1; d <= 2; ++d)
    for (int g = 0; g <= 4; ++g) {
      FdgResult r = F_dg(d, g, 8);
      if (!(r.r2 == r.r3)) bad << " (" << d << "," << g << ")";
    }
  push(out, "fdg.closed-form",
       "coefficient route of F_{d,g} equals (1-z)^{2g-2-5d} through z^8, d <= 2, g <= 4", "ok",
       bad.str().empty() ? "ok" : "mismatch at" + bad.str());
}

// ---------------------------------------------------------------------------
// Criterion 4: harmonic-number diagonal of G
// ---------------------------------------------------------------------------

void run_harmonic(std::vector<CriterionResult>& out) {
  const int M = 30;
  RationalSeries total = g_vertex_weight(1, M);
  auto vars = total.variables();
  RationalSeries z = RationalSeries::monomial(vars, {1}, BigRational(1));
  total *= z.scaled(BigRational(-1)).exp();
  for (int k = 2; k <= M; ++k) total += g_vertex_weight(k, M) * z.scaled(BigRational(-k)).exp();
  std::ostringstream bad;
  for (int m = 0; m <= M; ++m)
    if (total.coefficient(Monomial{m}) != harmonic(m)) bad << " z^" << m;
  push(out, "harmonic.G-diagonal",
       "z^m coefficient of G(z, e^{-z}) is the harmonic number H_m, m <= 30", "ok",
       bad.str().empty() ? "ok" : "mismatch at" + bad.str());
}

// ---------------------------------------------------------------------------
// Criterion 5: alternating binomial identity
// ---------------------------------------------------------------------------

void run_binomial(std::vector<CriterionResult>& out) {
  push(out, "binomial.grid", "alternating binomial identity on 0 <= a <= 8, 0 <= b <= 12, 0 <= c <= 8",
       "ok", binomial_identity_check(8, 12, 8) ? "ok" : "failed");
}

// ---------------------------------------------------------------------------
// Criterion 6: hypertail coefficients and closed forms
// ---------------------------------------------------------------------------

void run_hypertail(std::vector<CriterionResult>& out) {
  HypertailCaps caps;
  caps.d1 = 0;
  caps.d2 = 5;
  caps.z = 6;
  caps.h = 4;
  caps.lam = 8;
  HypertailSeries t =
      extract_hypertail(mirror_transform_small(i_restricted(FixedLocus::Q0, caps)), caps);

  const LambdaRational one(BigRational(1));
  const LambdaRational lam = LambdaRational::lambda_power(1);

  // q^gamma coefficient: -lambda / (5H + lambda + z).
  {
    auto v2 = make_variables({{"z", caps.z, 0, -1}, {"H", 3, 0, 4}});
    LambdaSeries denom = LambdaSeries::constant(v2, lam);
    denom += LambdaSeries::monomial(v2, {1, 0}, one);
    denom += LambdaSeries::monomial(v2, {0, 1}, LambdaRational(BigRational(5)));
    LambdaSeries expect = denom.inverse().scaled(LambdaRational(BigRational(-1)) * lam);
    std::ostringstream bad;
    for (int zk = 0; zk <= caps.z; ++zk)
      for (int hb = 0; hb <= 3; ++hb) {
        LambdaRational lhs = t.data.coefficient({{"q2", 1}, {"z", zk}, {"H", hb}});
        LambdaRational rhs = expect.coefficient(Monomial{zk, hb});
        if (!(lhs == rhs)) bad << " z^" << zk << "H^" << hb;
      }
    push(out, "hypertail.qgamma", "q^gamma tail coefficient equals -lambda/(5H+lambda+z)", "ok",
         bad.str().empty() ? "ok" : "mismatch at" + bad.str());
  }

  // q^{2 gamma} coefficient:
  // [ (1/z)(1/2 - (5H+z)/(5H+l+z) + (5H+z)(5H+2z)/(2(5H+l+z)(5H+l+2z))) ]_+ .
  {
    auto v3 = make_variables({{"z", caps.z + 1, -1, -1}, {"H", 3, 0, 4}});
    LambdaSeries zz = LambdaSeries::monomial(v3, {1, 0}, one);
    LambdaSeries h5 = LambdaSeries::monomial(v3, {0, 1}, LambdaRational(BigRational(5)));
    LambdaSeries lamc = LambdaSeries::constant(v3, lam);
    LambdaSeries invA = (lamc + h5 + zz).inverse();
    LambdaSeries invB = (lamc + h5 + zz.scaled(BigRational(2))).inverse();
    LambdaSeries inner = LambdaSeries::constant(v3, LambdaRational(BigRational(1, 2)));
    inner -= (h5 + zz) * invA;
    inner += ((h5 + zz) * (h5 + zz.scaled(BigRational(2))) * invA * invB).scaled(BigRational(1, 2));
    LambdaSeries shifted = (inner * LambdaSeries::monomial(v3, {-1, 0}, one)).plus_truncate("z");
    std::ostringstream bad;
    for (int zk = 0; zk <= caps.z; ++zk)
      for (int hb = 0; hb <= 3; ++hb) {
        LambdaRational lhs = t.data.coefficient({{"q2", 2}, {"z", zk}, {"H", hb}});
        LambdaRational rhs = shifted.coefficient(Monomial{zk, hb});
        if (!(lhs == rhs)) bad << " z^" << zk << "H^" << hb;
      }
    push(out, "hypertail.q2gamma", "q^{2 gamma} tail coefficient equals its elementary-fraction form",
         "ok", bad.str().empty() ? "ok" : "mismatch at" + bad.str());
  }

  // Closed-form routes against the extraction on q2 <= 5, z <= 6, H <= 1.
  auto window_diff = [&](const HypertailSeries& a) {
    std::ostringstream bad;
    for (int d2 = 1; d2 <= 5; ++d2)
      for (int zk = 0; zk <= 6; ++zk)
        for (int hb = 0; hb <= 1; ++hb) {
          LambdaRational x = a.data.coefficient({{"q2", d2}, {"z", zk}, {"H", hb}});
          LambdaRational y = t.data.coefficient({{"q2", d2}, {"z", zk}, {"H", hb}});
          if (!(x == y)) bad << " q2^" << d2 << "z^" << zk << "H^" << hb;
        }
    return bad.str();
  };
  std::string d1 = window_diff(t_qlprime0_closed(caps, A1Normalization::PowerDMinusOne));
  push(out, "hypertail.corollary-route",
       "per-degree closed form matches the extraction (q2 <= 5, z <= 6, H <= 1)", "ok",
       d1.empty() ? "ok" : "mismatch at" + d1);
  std::string d2 = window_diff(t_closed_qgammaprime0(caps, A1Normalization::PowerDMinusOne));
  push(out, "hypertail.proposition-route",
       "assembled closed form matches the extraction (q2 <= 5, z <= 6, H <= 1)", "ok",
       d2.empty() ? "ok" : "mismatch at" + d2);
  std::string d3 = window_diff(t_qlprime0_closed(caps, A1Normalization::PowerDMinusTwo));
  push(out, "hypertail.normalization-artifact",
       "normalization resolution: the m^{d2-1} factor is exact, the literal m^{d2-2} variant is not",
       "differs", d3.empty() ? "matches" : "differs");
}

// ---------------------------------------------------------------------------
// Criterion 7: oracle agreements
// ---------------------------------------------------------------------------

void run_series_oracles(std::vector<CriterionResult>& out) {
  {
    std::ostringstream bad;
    for (int n = 1; n <= 4; ++n)
      for (int ab = 0; ab <= n; ++ab)
        for (int pt = 0; pt <= ab; ++pt)
          for (int K = 1; K <= 8; ++K)
            if (!(S_tree(ab, pt, n, K, 8) == S_brute(ab, pt, n, K, 8)))
              bad << " (" << ab << "," << pt << "," << n << "," << K << ")";
    push(out, "oracle.S-tree", "tree-function form of S agrees with brute enumeration (n <= 4, K <= 8)",
         "ok", bad.str().empty() ? "ok" : "mismatch at" + bad.str());
  }
  {
    std::ostringstream bad;
    for (int i = 0; i <= 3; ++i)
      for (int K = 1; K <= 6; ++K)
        for (int g = 0; g <= 3; ++g)
          if (!(f_iK(i, K, g, 6) == f_iK_brute(i, K, g, 6)))
            bad << " (" << i << "," << K << "," << g << ")";
    push(out, "oracle.f-iK", "closed form of f_{i,K} agrees with the quadruple sum (i <= 3, K <= 6, g <= 3)",
         "ok", bad.str().empty() ? "ok" : "mismatch at" + bad.str());
  }
  {
    auto vars = make_variables({{"y", 8, 0, -1}});
    RationalSeries y = RationalSeries::monomial(vars, {1}, BigRational(1));
    RationalSeries one = RationalSeries::constant(vars, BigRational(1));
    RationalSeries T = tree_of(y);
    std::vector<RationalSeries> tests = {y.exp(), (one - y).int_pow(-2),
                                         one + y.scaled(BigRational(3)) + (y * y * y)};
    std::ostringstream bad;
    for (size_t fi = 0; fi < tests.size(); ++fi) {
      RationalSeries comp = tests[fi].substitute("y", T);
      for (int k = 0; k <= 8; ++k)
        if (comp.coefficient(Monomial{k}) != lagrange_coeff(tests[fi], "y", k))
          bad << " (F" << fi << ",k=" << k << ")";
    }
    push(out, "oracle.lagrange", "Lagrange-inversion coefficients agree with direct composition (k <= 8)",
         "ok", bad.str().empty() ? "ok" : "mismatch at" + bad.str());
  }
}

// Coefficient of prod u_i^{a_i} in the multi-point generating function with
// |xa| divisor-dressed slots, |ya| plain slots, N total slots.
BigRational mp_coefficient(int g, int N, const std::vector<int>& xa, const std::vector<int>& ya,
                           const BigRational& deg_H) {
  int m = static_cast<int>(xa.size());
  int n = static_cast<int>(ya.size());
  std::vector<VariableSpec> specs;
  specs.reserve(m + n);
  for (int i = 0; i < m + n; ++i) specs.push_back({"u" + std::to_string(i), 4, 0, -1});
  auto vars = make_variables(specs);
  std::vector<RationalSeries> xs, ys;
  Monomial target(m + n, 0);
  for (int i = 0; i < m; ++i) {
    Monomial e(m + n, 0);
    e[i] = 1;
    xs.push_back(RationalSeries::monomial(vars, e, BigRational(1)));
    target[i] = xa[i];
  }
  for (int j = 0; j < n; ++j) {
    Monomial e(m + n, 0);
    e[m + j] = 1;
    ys.push_back(RationalSeries::monomial(vars, e, BigRational(1)));
    target[m + j] = ya[j];
  }
  RationalSeries one = RationalSeries::constant(vars, BigRational(1));
  RationalSeries s = cy3_multi_point<RationalSeries>(g, N, n, m, xs, ys, deg_H, one);
  return s.coefficient(target);
}

void for_each_tuple(int len, int total_max, const std::function<void(const std::vector<int>&)>& f) {
  std::vector<int> a(len, 0);
  std::function<void(int, int)> rec = [&](int pos, int left) {
    if (pos == len) {
      f(a);
      return;
    }
    for (int v = 0; v <= left; ++v) {
      a[pos] = v;
      rec(pos + 1, left - v);
    }
    a[pos] = 0;
  };
  rec(0, total_max);
}

void run_cy3_oracles(std::vector<CriterionResult>& out) {
  const BigRational degH(5);
  {
    std::ostringstream bad;
    for (int g = 0; g <= 4; ++g)
      for (int m = 0; m <= 4; ++m)
        for (int n = 0; n + m <= 4; ++n) {
          if (n + m == 0) continue;
          for (int extra = 0; extra <= 1; ++extra) {
            int N = n + m + extra;
            for_each_tuple(m + n, 4, [&](const std::vector<int>& a) {
              std::vector<int> xa(a.begin(), a.begin() + m);
              std::vector<int> ya(a.begin() + m, a.end());
              BigRational lhs = mp_coefficient(g, N, xa, ya, degH);
              std::vector<CY3Insertion> ins;
              for (int v : xa) ins.push_back({v, 1});
              for (int v : ya) ins.push_back({v, 0});
              for (int e = 0; e < extra; ++e) ins.push_back({0, 0});
              BigRational rhs = cy3_reduce_by_equations(g, degH, ins);
              if (lhs != rhs) bad << " (g=" << g << ",m=" << m << ",n=" << n << ",N=" << N << ")";
            });
          }
        }
    push(out, "oracle.multi-point",
         "multi-point closed form agrees with string/dilaton/divisor reduction (n + m <= 4, g <= 4)",
         "ok", bad.str().empty() ? "ok" : "mismatch at" + bad.str());
  }
  {
    std::ostringstream bad;
    for (int g = 0; g <= 4; ++g)
      for (int n = 1; n <= 3; ++n) {
        std::vector<VariableSpec> specs = {{"t0", n, 0, -1}, {"t1", n, 0, -1}};
        for (int i = 0; i < n; ++i) specs.push_back({"w" + std::to_string(i), 3, 0, -1});
        auto vars = make_variables(specs);
        auto mono = [&](int idx) {
          Monomial e(specs.size(), 0);
          e[idx] = 1;
          return RationalSeries::monomial(vars, e, BigRational(1));
        };
        RationalSeries one = RationalSeries::constant(vars, BigRational(1));
        std::vector<RationalSeries> zs;
        for (int i = 0; i < n; ++i) zs.push_back(mono(2 + i));
        RationalSeries qv = cy3_q_vertex<RationalSeries>(g, n, degH, mono(0), mono(1), zs, one);
        for (int m = 0; m <= n; ++m)
          for_each_tuple(n, 3, [&](const std::vector<int>& a) {
            Monomial e(specs.size(), 0);
            e[0] = n - m;
            e[1] = m;
            for (int i = 0; i < n; ++i) e[2 + i] = a[i];
            BigRational lhs = qv.coefficient(e);
            BigRational rhs(0);
            for (int mask = 0; mask < (1 << n); ++mask) {
              if (__builtin_popcount(static_cast<unsigned>(mask)) != m) continue;
              std::vector<int> xa, ya;
              for (int i = 0; i < n; ++i)
                (mask >> i & 1 ? xa : ya).push_back(a[i]);
              rhs += mp_coefficient(g, n, xa, ya, degH);
            }
            if (lhs != rhs) bad << " (g=" << g << ",n=" << n << ",m=" << m << ")";
          });
      }
    push(out, "oracle.q-vertex",
         "dressed-slot generating function agrees with the multi-point form (n <= 3)", "ok",
         bad.str().empty() ? "ok" : "mismatch at" + bad.str());
  }
}

// ---------------------------------------------------------------------------
// Criterion 8: structural invariants
// ---------------------------------------------------------------------------

BigRational psi_by_string(std::vector<int> a) {
  int n = static_cast<int>(a.size());
  long long total = 0;
  for (int v : a) total += v;
  if (total != n - 3) return BigRational(0);
  if (n == 3) return BigRational(1);
  int drop = -1;
  for (int i = n - 1; i >= 0; --i)
    if (a[i] == 0) {
      drop = i;
      break;
    }
  a.erase(a.begin() + drop);
  BigRational s(0);
  for (int j = 0; j < n - 1; ++j) {
    if (a[j] == 0) continue;
    --a[j];
    s += psi_by_string(a);
    ++a[j];
  }
  return s;
}

void run_structural(std::vector<CriterionResult>& out, unsigned seed) {
  {
    std::ostringstream bad;
    for (int g = 0; g <= 3; ++g)
      for (int ld = -3; ld <= 3; ++ld) {
        int sign = ((1 - g) % 2 == 0) ? 1 : -1;
        LambdaRational expect =
            LambdaRational(BigRational(sign)) * LambdaRational::lambda_power(2 * g - 2 - ld);
        if (!(twisted_zero_point(g, ld) == expect)) bad << " (g=" << g << ",ld=" << ld << ")";
      }
    push(out, "structural.zero-point",
         "zero-pointed twisted vertex is (-1)^{1-g} lambda^{2g-2-(class.D)}", "ok",
         bad.str().empty() ? "ok" : "mismatch at" + bad.str());
  }
  {
    std::ostringstream bad;
    for (long long g = 0; g <= 4; ++g)
      for (long long d = 0; d <= 4; ++d)
        for (long long K = 0; K <= 6; ++K)
          if (vdim_master(g, d, K) != 5 * d + 2 - 2 * g + K) bad << " (" << g << "," << d << "," << K << ")";
    push(out, "structural.vdim", "master-space virtual dimension is 5d + 2 - 2g + K", "ok",
         bad.str().empty() ? "ok" : "mismatch at" + bad.str());
  }
  {
    Lcg rng(seed);
    std::ostringstream bad;
    struct Case {
      int N, d;
      std::vector<std::pair<int, int>> ins;
      std::optional<TwistSpec> twist;
      const char* tag;
    };
    std::vector<Case> cases = {
        {2, 1, {{2, 1}}, std::nullopt, "P2-untwisted"},
        {4, 1, {{0, 1}}, TwistSpec{-5, TwistSign::Minus, true}, "P4-quintic-twist"},
        {3, 2, {{1, 1}, {0, 2}}, std::nullopt, "P3-degree2"},
    };
    for (const Case& c : cases) {
      LambdaRational v0 = descendant_invariant_PN(c.N, c.d, c.ins, c.twist, default_weights(c.N, 0));
      LambdaRational v1 = descendant_invariant_PN(c.N, c.d, c.ins, c.twist, default_weights(c.N, 1));
      LambdaRational v2;
      for (int attempt = 0;; ++attempt) {
        if (attempt > 50) throw std::runtime_error("seeded weights kept colliding");
        try {
          v2 = descendant_invariant_PN(c.N, c.d, c.ins, c.twist, seeded_weights(c.N, rng));
          break;
        } catch (const WeightCollision&) {
        }
      }
      if (!(v0 == v1 && v0 == v2)) bad << " " << c.tag;
    }
    push(out, "structural.weight-independence",
         "invariants agree across three torus-weight specializations", "ok",
         bad.str().empty() ? "ok" : "mismatch at" + bad.str());
  }
  {
    std::ostringstream bad;
    for (int n = 3; n <= 8; ++n) {
      std::vector<int> a(n, 0);
      std::function<void(int, int)> rec = [&](int pos, int left) {
        if (pos == n - 1) {
          a[pos] = left;
          if (psi_integral_M0n(a) != psi_by_string(a)) bad << " n=" << n;
          return;
        }
        for (int v = 0; v <= left; ++v) {
          a[pos] = v;
          rec(pos + 1, left - v);
        }
      };
      rec(0, n - 3);
    }
    push(out, "structural.psi-string",
         "psi integrals on the moduli of marked rational curves match the string-equation recursion (n <= 8)",
         "ok", bad.str().empty() ? "ok" : "mismatch at" + bad.str());
  }
  {
    RationalSeries T = tree_function(10);
    RationalSeries x = RationalSeries::monomial(T.variables(), {1}, BigRational(1));
    push(out, "structural.tree-equation", "tree function satisfies T = x e^T through order 10", "ok",
         x * T.exp() == T ? "ok" : "failed");
  }
}

using SuiteFn = std::function<void(std::vector<CriterionResult>&)>;

void guarded(std::vector<CriterionResult>& out, const std::string& id, const SuiteFn& fn) {
  try {
    fn(out);
  } catch (const std::exception& e) {
    out.push_back({id, "suite aborted by exception", "ok", std::string("exception: ") + e.what(), false});
  }
}

}  // namespace

std::vector<CriterionResult> run_acceptance(const std::string& suite, unsigned seed) {
  static const std::set<std::string> known = {"all",      "p2",        "quintic1", "fdg",
                                              "harmonic", "binomial",  "hypertail", "oracles",
                                              "structural", "appendix"};
  if (!known.count(suite)) throw std::invalid_argument("unknown suite: " + suite);
  bool all = suite == "all";
  bool appendix = suite == "appendix";
  std::vector<CriterionResult> out;
  if (all || suite == "p2") guarded(out, "p2", run_p2);
  if (all || suite == "quintic1") guarded(out, "quintic1", run_quintic1);
  if (all || appendix || suite == "fdg") guarded(out, "fdg", run_fdg);
  if (all || appendix || suite == "harmonic") guarded(out, "harmonic", run_harmonic);
  if (all || appendix || suite == "binomial") guarded(out, "binomial", run_binomial);
  if (all || suite == "hypertail") guarded(out, "hypertail", run_hypertail);
  if (all || appendix || suite == "oracles") guarded(out, "oracles.series", run_series_oracles);
  if (all || suite == "oracles") guarded(out, "oracles.cy3", run_cy3_oracles);
  if (all || suite == "structural")
    guarded(out, "structural", [seed](std::vector<CriterionResult>& o) { run_structural(o, seed); });
  return out;
}

}  // namespace qlef
