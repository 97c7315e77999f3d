#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

#include "qlef/lambda_rational.hpp"
#include "qlef/rational.hpp"

namespace qlef {

// One formal variable of a truncated multivariate series.
//  cap        : largest exponent kept; higher powers are silently truncated.
//  floor      : smallest exponent allowed (negative for Laurent variables such
//               as z). Terms below the floor are an error, not a truncation:
//               they would silently corrupt every later [.]_+ extraction.
//  nilpotency : if >= 0, x^nilpotency = 0 identically (H^4 = 0 on a 3-fold);
//               such terms are exact zeros, dropped before any floor check.
struct VariableSpec {
  std::string name;
  int cap = 0;
  int floor = 0;
  int nilpotency = -1;
};

class VariableSet {
 public:
  explicit VariableSet(std::vector<VariableSpec> specs) : specs_(std::move(specs)) {
    for (const auto& s : specs_) {
      if (s.cap < s.floor) throw std::invalid_argument("VariableSet: cap below floor");
      if (s.nilpotency == 0) throw std::invalid_argument("VariableSet: nilpotency 0 means 1 = 0");
    }
  }

  size_t size() const { return specs_.size(); }
  const VariableSpec& spec(size_t i) const { return specs_[i]; }

  size_t index_of(const std::string& name) const {
    for (size_t i = 0; i < specs_.size(); ++i)
      if (specs_[i].name == name) return i;
    throw std::invalid_argument("VariableSet: unknown variable " + name);
  }

  friend bool operator==(const VariableSet& a, const VariableSet& b) {
    if (a.specs_.size() != b.specs_.size()) return false;
    for (size_t i = 0; i < a.specs_.size(); ++i) {
      const auto& x = a.specs_[i];
      const auto& y = b.specs_[i];
      if (x.name != y.name || x.cap != y.cap || x.floor != y.floor ||
          x.nilpotency != y.nilpotency)
        return false;
    }
    return true;
  }
  friend bool operator!=(const VariableSet& a, const VariableSet& b) { return !(a == b); }

 private:
  std::vector<VariableSpec> specs_;
};

using Monomial = std::vector<int>;

// Graded lexicographic order: total degree first, then leftmost variable.
// Gives a deterministic, human-sensible key order ("1", "z", "z^2", ...).
struct GradedLex {
  bool operator()(const Monomial& a, const Monomial& b) const {
    long long da = 0, db = 0;
    for (int e : a) da += e;
    for (int e : b) db += e;
    if (da != db) return da < db;
    return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
  }
};

template <class S>
struct ScalarTraits;

template <>
struct ScalarTraits<BigRational> {
  static BigRational zero() { return BigRational(0); }
  static BigRational one() { return BigRational(1); }
  static bool is_zero(const BigRational& x) { return x == 0; }
  static BigRational from_rational(const BigRational& q) { return q; }
  static BigRational inverse(const BigRational& x) {
    if (x == 0) throw std::domain_error("inverse of zero");
    return BigRational(1) / x;
  }
  static std::string str(const BigRational& x) { return to_string(x); }
};

template <>
struct ScalarTraits<LambdaRational> {
  static LambdaRational zero() { return LambdaRational(); }
  static LambdaRational one() { return LambdaRational(BigRational(1)); }
  static bool is_zero(const LambdaRational& x) { return x.is_zero(); }
  static LambdaRational from_rational(const BigRational& q) { return LambdaRational(q); }
  static LambdaRational inverse(const LambdaRational& x) {
    if (x.is_zero()) throw std::domain_error("inverse of zero");
    return LambdaRational(BigRational(1)) / x;
  }
  static std::string str(const LambdaRational& x) { return x.str(); }
};

// Truncated multivariate (Laurent) series over an exact scalar ring S.
template <class S>
class MultiSeries {
 public:
  using Traits = ScalarTraits<S>;
  using TermMap = std::map<Monomial, S, GradedLex>;

  explicit MultiSeries(std::shared_ptr<const VariableSet> vars) : vars_(std::move(vars)) {
    if (!vars_) throw std::invalid_argument("MultiSeries: null variable set");
  }

  static MultiSeries constant(std::shared_ptr<const VariableSet> vars, const S& c) {
    MultiSeries r(std::move(vars));
    r.add_term(Monomial(r.vars_->size(), 0), c);
    return r;
  }

  static MultiSeries monomial(std::shared_ptr<const VariableSet> vars, const Monomial& e,
                              const S& c) {
    MultiSeries r(std::move(vars));
    r.add_term(e, c);
    return r;
  }

  const std::shared_ptr<const VariableSet>& variables() const { return vars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  // Adds c * x^e, applying nilpotency (exact zero), cap truncation (drop) and
  // floor checking (throw) in that order.
  void add_term(const Monomial& e, const S& c) {
    if (Traits::is_zero(c)) return;
    if (e.size() != vars_->size()) throw std::invalid_argument("MultiSeries: bad monomial size");
    for (size_t i = 0; i < e.size(); ++i) {
      const VariableSpec& v = vars_->spec(i);
      if (v.nilpotency >= 0 && e[i] >= v.nilpotency) return;  // exact zero
    }
    for (size_t i = 0; i < e.size(); ++i)
      if (e[i] > vars_->spec(i).cap) return;  // truncated away
    for (size_t i = 0; i < e.size(); ++i)
      if (e[i] < vars_->spec(i).floor)
        throw std::domain_error("MultiSeries: exponent of " + vars_->spec(i).name +
                                " fell below its floor");
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_.emplace(e, c);
    } else {
      it->second += c;
      if (Traits::is_zero(it->second)) terms_.erase(it);
    }
  }

  S coefficient(const Monomial& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Traits::zero() : it->second;
  }

  S coefficient(const std::map<std::string, int>& powers) const {
    Monomial e(vars_->size(), 0);
    for (const auto& [name, k] : powers) e[vars_->index_of(name)] = k;
    return coefficient(e);
  }

  S constant_term() const { return coefficient(Monomial(vars_->size(), 0)); }

  MultiSeries& operator+=(const MultiSeries& o) {
    check_same(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  MultiSeries& operator-=(const MultiSeries& o) {
    check_same(o);
    for (const auto& [e, c] : o.terms_) {
      S neg = Traits::zero();
      neg -= c;
      add_term(e, neg);
    }
    return *this;
  }
  friend MultiSeries operator+(MultiSeries a, const MultiSeries& b) { return a += b; }
  friend MultiSeries operator-(MultiSeries a, const MultiSeries& b) { return a -= b; }

  MultiSeries operator-() const {
    MultiSeries r(vars_);
    for (const auto& [e, c] : terms_) {
      S neg = Traits::zero();
      neg -= c;
      r.terms_.emplace(e, neg);
    }
    return r;
  }

  MultiSeries operator*(const MultiSeries& o) const {
    check_same(o);
    MultiSeries r(vars_);
    for (const auto& [ea, ca] : terms_) {
      for (const auto& [eb, cb] : o.terms_) {
        Monomial e(ea);
        for (size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
        r.add_term(e, ca * cb);
      }
    }
    return r;
  }
  MultiSeries& operator*=(const MultiSeries& o) { return *this = *this * o; }

  MultiSeries scaled(const S& c) const {
    MultiSeries r(vars_);
    if (Traits::is_zero(c)) return r;
    for (const auto& [e, co] : terms_) r.add_term(e, co * c);
    return r;
  }
  MultiSeries scaled(const BigRational& q) const
    requires(!std::is_same_v<S, BigRational>)
  {
    return scaled(Traits::from_rational(q));
  }

  friend bool operator==(const MultiSeries& a, const MultiSeries& b) {
    return *a.vars_ == *b.vars_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const MultiSeries& a, const MultiSeries& b) { return !(a == b); }

  // f^e for integer e; negative e inverts (requires invertible constant term).
  MultiSeries int_pow(long long e) const {
    if (e < 0) return inverse().int_pow(-e);
    MultiSeries result = constant(vars_, Traits::one());
    MultiSeries base = *this;
    long long k = e;
    while (k > 0) {
      if (k & 1) result *= base;
      base *= base;
      k >>= 1;
    }
    return result;
  }

  MultiSeries inverse() const {
    S c = constant_term();
    if (Traits::is_zero(c))
      throw std::domain_error("MultiSeries: inverse requires a nonzero constant term");
    S cinv = Traits::inverse(c);
    // f = c (1 + u); 1/f = (1/c) sum (-u)^k.
    MultiSeries u = scaled(cinv);
    u.terms_.erase(Monomial(vars_->size(), 0));
    MultiSeries result = constant(vars_, Traits::one());
    MultiSeries power = constant(vars_, Traits::one());
    for (long long k = 1; !power.is_zero(); ++k) {
      guard_iterations(k, "inverse");
      power *= u;
      if (power.is_zero()) break;
      if (k % 2 == 1)
        result -= power;
      else
        result += power;
    }
    return result.scaled(cinv);
  }

  // exp(f) for f with zero constant term (truncation must kill f^k eventually).
  MultiSeries exp() const {
    if (!Traits::is_zero(constant_term()))
      throw std::domain_error("MultiSeries: exp requires zero constant term");
    MultiSeries result = constant(vars_, Traits::one());
    MultiSeries power = constant(vars_, Traits::one());
    BigInt kfact = 1;
    for (long long k = 1; !power.is_zero(); ++k) {
      guard_iterations(k, "exp");
      power *= *this;
      if (power.is_zero()) break;
      kfact *= k;
      result += power.scaled(BigRational(BigInt(1), kfact));
    }
    return result;
  }

  // log(1 + f) for f with zero constant term.
  MultiSeries log_one_plus() const {
    if (!Traits::is_zero(constant_term()))
      throw std::domain_error("MultiSeries: log_one_plus requires zero constant term");
    MultiSeries result(vars_);
    MultiSeries power = constant(vars_, Traits::one());
    for (long long k = 1; !power.is_zero(); ++k) {
      guard_iterations(k, "log_one_plus");
      power *= *this;
      if (power.is_zero()) break;
      BigRational c(BigInt(k % 2 == 1 ? 1 : -1), BigInt(k));
      result += power.scaled(c);
    }
    return result;
  }

  // Substitutes g for the named variable. Soundness on truncated inputs
  // requires g to have zero constant term (otherwise dropped high powers of
  // the variable would have contributed to low orders of the result).
  MultiSeries substitute(const std::string& var, const MultiSeries& g) const {
    check_same(g);
    if (!Traits::is_zero(g.constant_term()))
      throw std::domain_error("MultiSeries: substitute requires zero constant term");
    size_t vi = vars_->index_of(var);
    // Group by exponent of var so each g^e is computed once.
    std::map<int, MultiSeries> by_exp;
    for (const auto& [e, c] : terms_) {
      Monomial rest(e);
      int k = rest[vi];
      rest[vi] = 0;
      auto it = by_exp.find(k);
      if (it == by_exp.end()) it = by_exp.emplace(k, MultiSeries(vars_)).first;
      it->second.add_term(rest, c);
    }
    MultiSeries result(vars_);
    for (const auto& [k, part] : by_exp) {
      if (k == 0) {
        result += part;
      } else if (k > 0) {
        result += part * g.int_pow(k);
      } else {
        result += part * g.int_pow(k);  // throws via inverse(): g has no unit term
      }
    }
    return result;
  }

  // Sets the named (non-Laurent) variable to zero: keeps exponent-0 terms.
  MultiSeries at_zero(const std::string& var) const {
    size_t vi = vars_->index_of(var);
    MultiSeries r(vars_);
    for (const auto& [e, c] : terms_) {
      if (e[vi] > 0) continue;
      if (e[vi] < 0)
        throw std::domain_error("MultiSeries: setting " + var + " = 0 hits a pole");
      r.terms_.emplace(e, c);
    }
    return r;
  }

  // Drops terms whose exponent of the named variable exceeds k.
  MultiSeries truncate_var(const std::string& var, int k) const {
    size_t vi = vars_->index_of(var);
    MultiSeries r(vars_);
    for (const auto& [e, c] : terms_)
      if (e[vi] <= k) r.terms_.emplace(e, c);
    return r;
  }

  // [.]_+ : drops terms with a negative exponent of any listed variable.
  MultiSeries plus_truncate(const std::vector<std::string>& laurent_vars) const {
    std::vector<size_t> idx;
    idx.reserve(laurent_vars.size());
    for (const auto& v : laurent_vars) idx.push_back(vars_->index_of(v));
    MultiSeries r(vars_);
    for (const auto& [e, c] : terms_) {
      bool keep = true;
      for (size_t vi : idx)
        if (e[vi] < 0) {
          keep = false;
          break;
        }
      if (keep) r.terms_.emplace(e, c);
    }
    return r;
  }
  MultiSeries plus_truncate(const std::string& var) const {
    return plus_truncate(std::vector<std::string>{var});
  }

  std::string monomial_key(const Monomial& e) const {
    std::ostringstream out;
    bool first = true;
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!first) out << "*";
      out << vars_->spec(i).name;
      if (e[i] != 1) out << "^" << e[i];
      first = false;
    }
    if (first) return "1";
    return out.str();
  }

  // Deterministic (graded-lex ordered) key -> value string pairs.
  std::vector<std::pair<std::string, std::string>> to_ordered_strings() const {
    std::vector<std::pair<std::string, std::string>> out;
    out.reserve(terms_.size());
    for (const auto& [e, c] : terms_) out.emplace_back(monomial_key(e), Traits::str(c));
    return out;
  }

 private:
  void check_same(const MultiSeries& o) const {
    if (!(*vars_ == *o.vars_))
      throw std::invalid_argument("MultiSeries: mismatched variable sets");
  }
  void guard_iterations(long long k, const char* op) const {
    long long limit = 4;
    for (size_t i = 0; i < vars_->size(); ++i) {
      const VariableSpec& v = vars_->spec(i);
      limit += (v.cap - std::min(v.floor, 0)) + 1;
    }
    limit *= 4;
    if (k > limit)
      throw std::domain_error(std::string("MultiSeries: ") + op +
                              " did not terminate under truncation");
  }

  std::shared_ptr<const VariableSet> vars_;
  TermMap terms_;
};

using RationalSeries = MultiSeries<BigRational>;
using LambdaSeries = MultiSeries<LambdaRational>;

inline std::shared_ptr<const VariableSet> make_variables(std::vector<VariableSpec> specs) {
  return std::make_shared<const VariableSet>(std::move(specs));
}

// Re-expresses f over another variable set, matching variables by name.
// Terms above the new caps are dropped; terms below a floor still throw, so a
// rehouse into a tighter window is a checked truncation, not a silent one.
template <class S>
MultiSeries<S> rehoused(const MultiSeries<S>& f, std::shared_ptr<const VariableSet> vars) {
  std::vector<size_t> where(f.variables()->size());
  for (size_t i = 0; i < where.size(); ++i)
    where[i] = vars->index_of(f.variables()->spec(i).name);
  MultiSeries<S> r(vars);
  for (const auto& [e, c] : f.terms()) {
    Monomial m(vars->size(), 0);
    for (size_t i = 0; i < e.size(); ++i) m[where[i]] = e[i];
    r.add_term(m, c);
  }
  return r;
}

}  // namespace qlef
