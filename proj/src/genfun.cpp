#include "qlef/genfun.hpp"

#include <stdexcept>

#include "qlef/hypertail.hpp"
#include "qlef/special_series.hpp"

namespace qlef {

namespace {

std::shared_ptr<const VariableSet> z_vars(int zcap) {
  return make_variables({{"z", zcap, 0, -1}});
}

std::shared_ptr<const VariableSet> zu_vars(int zcap, int ucap) {
  return make_variables({{"z", zcap, 0, -1}, {"u", ucap, 0, -1}});
}

RationalSeries one_of(const std::shared_ptr<const VariableSet>& vars) {
  return RationalSeries::constant(vars, BigRational(1));
}

// T(zu) = sum_{n>=1} n^{n-1}/n! (zu)^n on a (z, u) variable set.
RationalSeries tree_zu(const std::shared_ptr<const VariableSet>& vars) {
  int n_max = std::min(vars->spec(0).cap, vars->spec(1).cap);
  RationalSeries t(vars);
  for (int n = 1; n <= n_max; ++n)
    t.add_term({n, n}, BigRational(int_pow(BigInt(n), n - 1), factorial(n)));
  return t;
}

// gamma weight as a term series on an arbitrary (z, u)-shaped set; zu = true
// attaches u^k.
RationalSeries vertex_weight(const std::shared_ptr<const VariableSet>& vars, int k, bool with_u,
                             bool q_kind) {
  if (k < 1) throw std::invalid_argument("vertex weight: k must be >= 1");
  int zcap = vars->spec(0).cap;
  RationalSeries f(vars);
  auto mono = [&](int zdeg) {
    Monomial e(vars->size(), 0);
    e[0] = zdeg;
    if (with_u) e[1] = k;
    return e;
  };
  BigRational head = q_kind ? (BigRational(k - 2) + BigRational(k) * harmonic(k)) *
                                  BigRational(int_pow(BigInt(k), k - 1), factorial(k))
                            : harmonic(k) * BigRational(int_pow(BigInt(k), k), factorial(k));
  f.add_term(mono(k), head);
  for (int i = k + 1; i <= zcap; ++i) {
    // -g_k(kz) term: -(kz)^i / (i! (i-k)).
    BigRational c = BigRational(int_pow(BigInt(k), i)) * inv_factorial(i) / BigRational(i - k);
    f.add_term(mono(i), -c);
  }
  return f;
}

// Q(z,u) (q_kind) or G(z,u) truncated to the caps of vars.
RationalSeries bivariate_weight_sum(const std::shared_ptr<const VariableSet>& vars, bool q_kind) {
  int ucap = vars->spec(1).cap;
  RationalSeries f(vars);
  for (int k = 1; k <= ucap; ++k) f += vertex_weight(vars, k, true, q_kind);
  return f;
}

// Extracts [u^K] as a series in z alone.
RationalSeries u_slice(const RationalSeries& f, int K, int zcap) {
  auto vars = z_vars(zcap);
  RationalSeries r(vars);
  for (const auto& [e, c] : f.terms())
    if (e[1] == K) r.add_term({e[0]}, c);
  return r;
}

}  // namespace

RationalSeries q_vertex_weight(int k, int zcap) {
  return vertex_weight(z_vars(zcap), k, false, true);
}

RationalSeries g_vertex_weight(int k, int zcap) {
  return vertex_weight(z_vars(zcap), k, false, false);
}

AbarSeries abar_series(AbarKind kind, int m, int q1cap, int q2cap) {
  if (m < 1) throw std::invalid_argument("abar_series: m must be >= 1");
  if (q1cap < 0 || q2cap < 0) throw std::invalid_argument("abar_series: negative cap");
  auto vars = make_variables({{"q1", q1cap, 0, -1}, {"q2", q2cap, 0, -1}});
  RationalSeries f(vars);
  for (int d1 = 0; d1 <= q1cap; ++d1) {
    for (int d2 = m; d2 <= q2cap; ++d2) {
      BigRational c = kind == AbarKind::A1 ? A1(d1, d2, m, A1Normalization::PowerDMinusOne)
                                           : A2(d1, d2, m);
      f.add_term({d1, d2}, c);
    }
  }
  return AbarSeries{kind, m, std::move(f)};
}

RationalSeries S_brute(int ab, int pt, int n, int K, int zcap) {
  if (n < 1 || ab < 0 || pt < 0 || K < 0) throw std::invalid_argument("S_brute: bad arguments");
  if (ab > n) throw std::invalid_argument("S_brute: ab > n");
  if (pt > ab) throw std::invalid_argument("S_brute: pt > ab");
  if (K > 12) throw std::invalid_argument("S_brute: K too large for brute enumeration");
  auto vars = z_vars(zcap);
  RationalSeries total(vars);
  std::vector<int> k(n, 0);
  // Enumerate compositions of K into n positive parts.
  auto rec = [&](auto&& self, int pos, int rest) -> void {
    if (pos == n) {
      if (rest != 0) return;
      // sigma_pt of the first ab parts.
      std::vector<BigRational> e(pt + 1, BigRational(0));
      e[0] = BigRational(1);
      for (int i = 0; i < ab; ++i)
        for (int j = std::min(pt, i + 1); j >= 1; --j) e[j] += BigRational(k[i]) * e[j - 1];
      if (e[pt] == 0) return;
      RationalSeries term(vars);
      {
        BigRational c = e[pt];
        int zdeg = 0;
        for (int i = 0; i < ab; ++i) {
          c *= BigRational(int_pow(BigInt(k[i]), k[i] - 1), factorial(k[i]));
          zdeg += k[i];
        }
        if (zdeg > zcap) return;
        term.add_term({zdeg}, c);
      }
      for (int l = ab; l < n; ++l) term *= vertex_weight(vars, k[l], false, true);
      total += term;
      return;
    }
    int slots_left = n - pos - 1;
    for (int v = 1; v + slots_left <= rest; ++v) {
      k[pos] = v;
      self(self, pos + 1, rest - v);
    }
  };
  rec(rec, 0, K);
  return total;
}

RationalSeries S_tree(int ab, int pt, int n, int K, int zcap) {
  if (n < 1 || ab < 0 || pt < 0 || K < 0) throw std::invalid_argument("S_tree: bad arguments");
  if (ab > n) throw std::invalid_argument("S_tree: ab > n");
  if (pt > ab) throw std::invalid_argument("S_tree: pt > ab");
  auto vars = zu_vars(zcap, K);
  RationalSeries T = tree_zu(vars);
  RationalSeries f = T.int_pow(ab);
  f *= (one_of(vars) - T).int_pow(-pt);
  f *= bivariate_weight_sum(vars, true).int_pow(n - ab);
  return u_slice(f, K, zcap).scaled(BigRational(binomial(ab, pt)));
}

RationalSeries f_iK(int i, int K, int g, int zcap) {
  if (i < 0 || K < 0 || g < 0) throw std::invalid_argument("f_iK: bad arguments");
  const int m = 2 * g - 4;
  auto vars = zu_vars(zcap, K);
  RationalSeries T = tree_zu(vars);
  RationalSeries one = one_of(vars);
  RationalSeries f = (one - T).int_pow(m + i + 1);
  f *= T.scaled(BigRational(-K)).exp();
  if (i > 0) {
    RationalSeries inner = T * (one - T * (one - T).int_pow(-1)) + bivariate_weight_sum(vars, true);
    f *= inner.int_pow(i);
  }
  BigRational pre = inv_factorial(i);
  if (i % 2 != 0) pre = -pre;
  return u_slice(f, K, zcap).scaled(pre);
}

RationalSeries f_iK_brute(int i, int K, int g, int zcap) {
  if (i < 0 || K < 0 || g < 0) throw std::invalid_argument("f_iK_brute: bad arguments");
  const int m = 2 * g - 4;
  auto vars = z_vars(zcap);
  RationalSeries total(vars);
  if (i == 0 && K == 0) total += one_of(vars);  // empty-insertion term
  for (int n = std::max(i, 1); n <= K; ++n) {
    for (int b = 0; b <= i; ++b) {
      BigRational base = inv_factorial(n - i) * inv_factorial(b) * inv_factorial(i - b);
      if (n % 2 != 0) base = -base;
      for (int p = 0; p <= n - i; ++p) {
        for (int t = 0; t <= b && n - i - p - t >= 0; ++t) {
          BigRational c = base * rat_pow0(BigRational(K), n - i - p - t);
          for (int r = 1; r <= p; ++r) c *= BigRational(m + i + r);
          for (int r = 0; r <= t - 1; ++r) c *= BigRational(n - i - p - r);
          c *= BigRational(binomial(n - i, p) * binomial(b, t), binomial(n - i + b, p + t));
          if (c == 0) continue;
          total += S_brute(n - i + b, p + t, n, K, zcap).scaled(c);
        }
      }
    }
  }
  return total;
}

FdgResult F_dg(int d, int g, int zcap) {
  if (d < 0 || g < 0 || zcap < 0) throw std::invalid_argument("F_dg: bad arguments");
  const int m = 2 * g - 4;
  auto vars = z_vars(zcap);
  FdgResult out{RationalSeries(vars), RationalSeries(vars), RationalSeries(vars), false};

  // r3: the closed form.
  {
    RationalSeries base = one_of(vars);
    base.add_term({1}, BigRational(-1));
    out.r3 = base.int_pow(2 * g - 2 - 5 * d);
  }

  // r2: direct double sum over K and i; f_{i,K} has z-valuation K, so the
  // K-truncation is exact for coefficients up to z^zcap.
  for (int K = 0; K <= zcap; ++K)
    for (int i = 0; i <= K; ++i) {
      BigRational w = rat_pow0(BigRational(-5 * d), i);
      if (w == 0) continue;
      out.r2 += f_iK(i, K, g, zcap).scaled(w);
    }

  // r1: Lagrange-inversion chain. On a (z, y) set, build
  // (1-y)^{m+2} e^{5d(1-z) sum_k (gamma_k(z)/z^k) (y e^{-y})^k}
  // and sum z^K [y^K] over K. The u-substitution u = y e^{-y} / z is encoded
  // by shifting each gamma_k down by z^k (gamma_k has z-valuation k).
  {
    auto zy = zu_vars(zcap, zcap);
    RationalSeries one = one_of(zy);
    RationalSeries y = RationalSeries::monomial(zy, {0, 1}, BigRational(1));
    RationalSeries w = y * (-y).exp();  // y e^{-y}
    RationalSeries arg(zy);
    std::vector<RationalSeries> wpow;
    wpow.emplace_back(one);
    for (int k = 1; k <= zcap; ++k) {
      wpow.emplace_back(wpow.back() * w);
      RationalSeries gk = vertex_weight(zy, k, false, false);
      RationalSeries shifted(zy);
      for (const auto& [e, c] : gk.terms()) shifted.add_term({e[0] - k, e[1]}, c);
      arg += shifted * wpow[k];
    }
    RationalSeries zfac = one;
    zfac.add_term({1, 0}, BigRational(-1));  // (1 - z)
    RationalSeries full = (one - y).int_pow(m + 2) * (arg * zfac).scaled(BigRational(5 * d)).exp();
    for (int K = 0; K <= zcap; ++K) {
      RationalSeries slice = u_slice(full, K, zcap);
      RationalSeries zk = RationalSeries::monomial(vars, {K}, BigRational(1));
      out.r1 += slice * zk;
    }
  }

  out.agree = out.r1 == out.r2 && out.r2 == out.r3;
  return out;
}

RationalSeries G_series(int zcap, int ucap) {
  return bivariate_weight_sum(zu_vars(zcap, ucap), false);
}

bool harmonic_lemma_check(int M) {
  if (M < 1) throw std::invalid_argument("harmonic_lemma_check: M must be >= 1");
  auto vars = z_vars(M);
  RationalSeries z = RationalSeries::monomial(vars, {1}, BigRational(1));
  RationalSeries g_at(vars);
  for (int k = 1; k <= M; ++k)
    g_at += g_vertex_weight(k, M) * z.scaled(BigRational(-k)).exp();
  RationalSeries residue = (one_of(vars) - z) * g_at + (-z).log_one_plus();
  return residue.is_zero();
}

namespace {

BigInt binom_bounded(long long n, long long k) {
  if (n < 0 || k < 0 || k > n) return BigInt(0);
  return binomial(n, k);
}

}  // namespace

bool binomial_identity_point(long long a, long long b, long long c) {
  if (a < 0 || c < 0) throw std::invalid_argument("binomial_identity_point: a, c must be >= 0");
  BigInt lhs(0);
  for (long long i = 0; i <= a; ++i) {
    BigInt term = binomial(a, i) * binom_bounded(b - i, c);
    if (i % 2 == 0)
      lhs += term;
    else
      lhs -= term;
  }
  return lhs == binomial(b - a, b - c);
}

bool binomial_identity_check(long long amax, long long bmax, long long cmax) {
  for (long long a = 0; a <= amax; ++a)
    for (long long b = 0; b <= bmax; ++b)
      for (long long c = 0; c <= cmax; ++c)
        if (!binomial_identity_point(a, b, c)) return false;
  return true;
}

RationalSeries F_dg_general(int d, int g, int q1cap, int q2cap) {
  if (d < 0 || g < 0 || q1cap < 0 || q2cap < 0)
    throw std::invalid_argument("F_dg_general: bad arguments");
  auto vars = make_variables({{"q1", q1cap, 0, -1}, {"q2", q2cap, 0, -1}});
  RationalSeries one = one_of(vars);

  std::vector<RationalSeries> a1(q2cap + 1, RationalSeries(vars));
  std::vector<RationalSeries> a2(q2cap + 1, RationalSeries(vars));
  for (int m = 1; m <= q2cap; ++m) {
    a1[m] = rehoused(abar_series(AbarKind::A1, m, q1cap, q2cap).data, vars);
    a2[m] = rehoused(abar_series(AbarKind::A2, m, q1cap, q2cap).data, vars);
  }

  // minus_A(h) = sum_m Abar1(m) h^m = -A(h); valuation >= 1 because each
  // Abar has positive Novikov valuation.
  auto weighted_sum = [&](const std::vector<RationalSeries>& coeffs, const RationalSeries& h,
                          bool times_m) {
    RationalSeries acc(vars);
    RationalSeries hp = one;
    for (int m = 1; m <= q2cap; ++m) {
      hp *= h;
      RationalSeries c = times_m ? coeffs[m].scaled(BigRational(m)) : coeffs[m];
      acc += c * hp;
    }
    return acc;
  };

  // Fixed point h = e^{-A(h)}; one Novikov order settles per iteration.
  RationalSeries h = one;
  for (int it = 0; it <= q1cap + q2cap + 1; ++it) h = weighted_sum(a1, h, false).exp();

  RationalSeries x = weighted_sum(a1, h, true);  // h A'(h) = -sum m Abar1(m) h^m ... sign below
  x = -x;                                        // X = h A'(h) with A = -sum Abar1 u^m
  RationalSeries a_at = -weighted_sum(a1, h, false);
  RationalSeries b_at = -weighted_sum(a2, h, false);

  RationalSeries one_plus_x = one + x;
  RationalSeries expo = (a_at * (one - x) + b_at) * one_plus_x.inverse();
  return one_plus_x.int_pow(-(2 * g - 2)) * expo.scaled(BigRational(5 * d)).exp();
}

long long vdim_master(long long g, long long d, long long K) { return 5 * d + 2 - 2 * g + K; }

std::vector<RelationCell> F_Kd3_relation_check(int Kmax, int d3max, int d1max, int gmax) {
  std::vector<RelationCell> out;
  for (int g = 0; g <= gmax; ++g) {
    for (int d1 = 0; d1 <= d1max; ++d1) {
      FdgResult F = F_dg(d1, g, Kmax);
      for (int K = 0; K <= Kmax; ++K) {
        for (int d3 = 0; d3 <= d3max; ++d3) {
          RelationCell cell{K, d3, d1, g, false, false};
          if (d3 == 0) {
            // Degenerate case: the relation reads F_{K,d1,g} = F_{K,d1,g} binom(K,K).
            BigRational lhs = F.r3.coefficient(Monomial{K});
            BigRational rhs = lhs * BigRational(binomial(K + d3, K));
            cell.verified = true;
            cell.pass = lhs == rhs;
          }
          out.push_back(cell);
        }
      }
    }
  }
  return out;
}

}  // namespace qlef
