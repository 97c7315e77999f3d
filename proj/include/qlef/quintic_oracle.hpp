#pragma once

#include <vector>

#include "qlef/rational.hpp"

namespace qlef {

// Genus-0 quintic Gromov-Witten numbers from the hypergeometric series of the
// degree-5 hypersurface in P^4: with I(q) = sum_d q^d prod_{m<=5d}(5H+m) /
// prod_{m<=d}(H+m)^5 expanded in the nilpotent H as I0 + I1 H + I2 H^2 + ...,
// the mirror map is F = I1/I0 and 5 (I2/I0 - F^2/2) = sum_d d N_d q^d e^{dF}.
// Instanton numbers n_d are defined by N_d = sum_{k | d} n_{d/k} / k^3.
struct QuinticNumbers {
  std::vector<BigRational> N;  // index d, 0 <= d <= dmax; N[0] = 0
  std::vector<BigRational> n;  // same indexing; n[0] = 0
};

QuinticNumbers quintic_mirror_numbers(int dmax);

}  // namespace qlef
