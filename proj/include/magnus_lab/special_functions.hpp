#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <gmpxx.h>

namespace magnus_lab {

/// Real type carrying 50 decimal digits; used for even zeta values.
using HighPrecision = boost::multiprecision::cpp_bin_float_50;

/// Exact Bernoulli number B_k with B_1 = -1/2, from
/// sum_{j<=k} C(k+1, j) B_j = 0. Results are memoized across calls.
mpq_class bernoulli(unsigned k);

/// zeta(2j) = (-1)^{j+1} B_{2j} (2 pi)^{2j} / (2 (2j)!). Requires j >= 1.
HighPrecision zeta_even(unsigned j);

/// Coefficient of x^k in x / (e^x - 1), i.e. B_k / k!.
mpq_class beta_series_coeff(unsigned k);

/// beta(x) = x / (e^x - 1), with beta(0) = 1.
double beta(double x);

/// Lower real branch of the Lambert W function: the w <= -1 solving
/// w e^w = x, for x in [-1/e, 0). Halley iteration.
double lambert_w_minus1(double x);

}  // namespace magnus_lab
