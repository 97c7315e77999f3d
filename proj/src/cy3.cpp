#include "qlef/cy3.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace qlef {

LambdaRational twisted_zero_point(int g, long long intersection_with_D) {
  LambdaRational value = LambdaRational::lambda_power(2 * g - 2 - intersection_with_D);
  if (((1 - g) % 2 + 2) % 2 == 1) value = -value;
  return value;
}

namespace {

using Key = std::vector<std::pair<int, int>>;

BigRational reduce_rec(int g, const BigRational& deg_H, Key ins,
                       std::map<Key, BigRational>& memo) {
  const int n = static_cast<int>(ins.size());
  if (n == 0) return BigRational(1);

  long long total = 0;
  for (auto& [a, b] : ins) {
    if (a < 0 || b < 0) throw std::invalid_argument("cy3_reduce_by_equations: negative exponent");
    if (b > 3) return BigRational(0);  // H^4 = 0
    total += a + b;
  }
  if (total != n) return BigRational(0);  // dimension axiom: vdim = n on a CY3

  std::sort(ins.begin(), ins.end());
  if (auto it = memo.find(ins); it != memo.end()) return it->second;

  // Some a + b <= 1 exists: otherwise total >= 2n > n. Sorted order puts it first.
  const auto [a0, b0] = ins[0];
  Key rest(ins.begin() + 1, ins.end());
  BigRational result(0);
  if (a0 == 0 && b0 == 0) {
    // string equation
    for (size_t j = 0; j < rest.size(); ++j)
      if (rest[j].first >= 1) {
        Key next = rest;
        --next[j].first;
        result += reduce_rec(g, deg_H, std::move(next), memo);
      }
  } else if (a0 == 1 && b0 == 0) {
    // dilaton equation
    result = BigRational(2 * g - 2 + (n - 1)) * reduce_rec(g, deg_H, rest, memo);
  } else {
    // a0 == 0, b0 == 1: divisor equation
    result = deg_H * reduce_rec(g, deg_H, rest, memo);
    for (size_t j = 0; j < rest.size(); ++j)
      if (rest[j].first >= 1) {
        Key next = rest;
        --next[j].first;
        ++next[j].second;
        result += reduce_rec(g, deg_H, std::move(next), memo);
      }
  }

  memo.emplace(std::move(ins), result);
  return result;
}

}  // namespace

BigRational cy3_reduce_by_equations(int g, const BigRational& deg_H,
                                    std::vector<CY3Insertion> insertions) {
  Key key;
  key.reserve(insertions.size());
  for (const auto& ins : insertions) key.emplace_back(ins.a, ins.b);
  std::map<Key, BigRational> memo;
  return reduce_rec(g, deg_H, std::move(key), memo);
}

}  // namespace qlef
