#include "magnus_lab/special_functions.hpp"

#include <cmath>
#include <limits>
#include <mutex>
#include <numbers>
#include <string>
#include <vector>

#include <boost/math/constants/constants.hpp>

#include "magnus_lab/error.hpp"

namespace magnus_lab {

namespace {

std::mutex bernoulli_mutex;
std::vector<mpq_class> bernoulli_table{mpq_class(1)};

mpz_class binomial(unsigned long n, unsigned long k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

mpz_class factorial(unsigned long n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

}  // namespace

mpq_class bernoulli(unsigned k) {
  std::lock_guard<std::mutex> lock(bernoulli_mutex);
  while (bernoulli_table.size() <= k) {
    const unsigned long m = bernoulli_table.size();
    // (m + 1) B_m = -sum_{j<m} C(m+1, j) B_j
    mpq_class s = 0;
    for (unsigned long j = 0; j < m; ++j) {
      if (j > 1 && j % 2 == 1) continue;
      s += mpq_class(binomial(m + 1, j)) * bernoulli_table[j];
    }
    mpq_class b = -s / mpq_class(m + 1);
    b.canonicalize();
    bernoulli_table.push_back(b);
  }
  return bernoulli_table[k];
}

HighPrecision zeta_even(unsigned j) {
  if (j == 0) throw DomainError("zeta_even: requires j >= 1");
  const mpq_class b = bernoulli(2 * j);
  // |B_2j| / (2 (2j)!) exactly, then times (2 pi)^{2j}.
  mpq_class q = abs(b) / mpq_class(2 * factorial(2 * j));
  q.canonicalize();
  const HighPrecision num(q.get_num().get_str());
  const HighPrecision den(q.get_den().get_str());
  const HighPrecision two_pi = 2 * boost::math::constants::pi<HighPrecision>();
  return num / den * pow(two_pi, 2 * j);
}

mpq_class beta_series_coeff(unsigned k) {
  mpq_class c = bernoulli(k) / mpq_class(factorial(k));
  c.canonicalize();
  return c;
}

double beta(double x) {
  if (x == 0.0) return 1.0;
  return x / std::expm1(x);
}

double lambert_w_minus1(double x) {
  constexpr double inv_e = 1.0 / std::numbers::e;
  // Values within a few ulps below -1/e are the branch point itself.
  if (!(x >= -inv_e * (1.0 + 4.0 * std::numeric_limits<double>::epsilon())) || !(x < 0.0))
    throw DomainError("lambert_w_minus1: argument " + std::to_string(x) +
                      " outside [-1/e, 0)");
  if (x <= -inv_e) return -1.0;

  double w;
  const double p2 = 2.0 * (1.0 + std::numbers::e * x);
  if (p2 < 0.5) {
    // Branch-point series in p = -sqrt(2 (1 + e x)).
    const double p = -std::sqrt(std::max(p2, 0.0));
    w = -1.0 + p - p * p / 3.0 + 11.0 / 72.0 * p * p * p;
  } else {
    const double l1 = std::log(-x);
    const double l2 = std::log(-l1);
    w = l1 - l2 + l2 / l1;
  }

  for (int iter = 0; iter < 100; ++iter) {
    const double ew = std::exp(w);
    const double f = w * ew - x;
    const double wp1 = w + 1.0;
    if (wp1 == 0.0) break;
    const double denom = ew * wp1 - (w + 2.0) * f / (2.0 * wp1);
    const double step = f / denom;
    w -= step;
    if (std::abs(step) <= 4.0 * std::numeric_limits<double>::epsilon() * std::abs(w)) break;
  }
  return w;
}

}  // namespace magnus_lab
