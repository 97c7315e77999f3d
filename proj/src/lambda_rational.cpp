#include "qlef/lambda_rational.hpp"

#include <sstream>

namespace qlef {

std::string LambdaRational::str() const {
  std::string n = num_.str("l");
  if (den_.degree() == 0 && den_[0] == 1) return n;
  std::string d = den_.str("l");
  bool n_compound = num_.degree() > 0 && (num_.str("l").find(' ') != std::string::npos);
  bool d_compound = den_.degree() > 0 &&
                    (d.find(' ') != std::string::npos || d.find('-') != std::string::npos);
  std::ostringstream out;
  if (n_compound)
    out << "(" << n << ")";
  else
    out << n;
  out << "/";
  if (d_compound || (den_.degree() > 0 && d.find('*') != std::string::npos))
    out << "(" << d << ")";
  else
    out << d;
  return out.str();
}

BigRational LambdaRational::coeff_at_infinity(long long k) const {
  if (is_zero()) return BigRational(0);
  // this = lambda^{num.deg - den.deg} * (series in 1/lambda with constant term
  // lead(num)); expand num/den in descending powers by long division against
  // the reversed polynomials.
  long long shift = num_.degree() - den_.degree();  // top power of lambda
  long long idx = shift - k;                        // index into the 1/lambda series
  if (idx < 0) return BigRational(0);
  // Reverse both polynomials: num(l) = l^N nrev(1/l), den(l) = l^D drev(1/l).
  std::vector<BigRational> nrev(num_.degree() + 1), drev(den_.degree() + 1);
  for (long long i = 0; i <= num_.degree(); ++i) nrev[num_.degree() - i] = num_[i];
  for (long long i = 0; i <= den_.degree(); ++i) drev[den_.degree() - i] = den_[i];
  // Power-series division nrev/drev up to order idx (drev[0] = 1 by monicity).
  std::vector<BigRational> c(idx + 1);
  for (long long i = 0; i <= idx; ++i) {
    BigRational s = i < static_cast<long long>(nrev.size()) ? nrev[i] : BigRational(0);
    for (long long j = 1; j <= i && j < static_cast<long long>(drev.size()); ++j)
      s -= drev[j] * c[i - j];
    c[i] = s;  // drev[0] = 1
  }
  return c[idx];
}

std::vector<LambdaRational> LambdaZRational::z_series(int order) const {
  if (order < 0) throw std::invalid_argument("z_series: negative order");
  if (den_.empty() || den_[0].is_zero())
    throw SingularExpansion("z-expansion requested but denominator vanishes at z = 0");
  LambdaRational d0_inv(Poly(BigRational(1)), den_[0]);
  std::vector<LambdaRational> c(order + 1);
  for (int k = 0; k <= order; ++k) {
    LambdaRational s = k < static_cast<int>(num_.size())
                           ? LambdaRational(num_[k], Poly(BigRational(1)))
                           : LambdaRational();
    for (int j = 1; j <= k && j < static_cast<int>(den_.size()); ++j)
      s -= LambdaRational(den_[j], Poly(BigRational(1))) * c[k - j];
    c[k] = s * d0_inv;
  }
  return c;
}

std::vector<std::pair<long long, BigRational>> lambda_expand_inv(const LambdaRational& r,
                                                                 int order) {
  std::vector<std::pair<long long, BigRational>> out;
  if (r.is_zero()) return out;
  long long top = r.num().degree() - r.den().degree();
  for (long long k = -top; k <= order; ++k) {
    BigRational c = r.coeff_at_infinity(-k);
    if (c != 0) out.emplace_back(k, c);
  }
  return out;
}

std::vector<LambdaRational> lambda_expand_z(const LambdaZRational& r, int order) {
  return r.z_series(order);
}

std::string to_string(const LambdaRational& r) { return r.str(); }

}  // namespace qlef
