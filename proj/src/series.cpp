#include "magnus_lab/series.hpp"

#include <algorithm>
#include <string>

namespace magnus_lab {

MatrixPowerSeries::MatrixPowerSeries(std::size_t n, std::size_t order)
    : n_(n), coeffs_(order + 1, RationalMatrix(n)) {}

MatrixPowerSeries::MatrixPowerSeries(std::vector<RationalMatrix> coeffs)
    : n_(coeffs.empty() ? 0 : coeffs.front().size()), coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw SizeMismatch("power series needs at least one coefficient");
  for (const auto& c : coeffs_)
    if (c.size() != n_) throw SizeMismatch("power series coefficients differ in size");
}

MatrixPowerSeries MatrixPowerSeries::identity(std::size_t n, std::size_t order) {
  MatrixPowerSeries s(n, order);
  s[0] = RationalMatrix::identity(n);
  return s;
}

MatrixPowerSeries series_exp(const RationalMatrix& a, std::size_t order) {
  const std::size_t n = a.size();
  MatrixPowerSeries s(n, order);
  RationalMatrix term = RationalMatrix::identity(n);
  s[0] = term;
  for (std::size_t j = 1; j <= order; ++j) {
    term = term * a;
    term *= mpq_class(1, static_cast<unsigned long>(j));
    if (term.is_zero()) break;
    s[j] = term;
  }
  return s;
}

namespace {

// Cauchy product truncated at `order`; skips coefficients known to vanish
// below the lowest nonzero degree of each factor.
MatrixPowerSeries truncated_product(const MatrixPowerSeries& x, const MatrixPowerSeries& y,
                                    std::size_t order) {
  MatrixPowerSeries r(x.matrix_size(), order);
  for (std::size_t i = 0; i <= order; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; i + j <= order; ++j) {
      if (y[j].is_zero()) continue;
      r[i + j] += x[i] * y[j];
    }
  }
  return r;
}

}  // namespace

MatrixPowerSeries series_mul(const MatrixPowerSeries& x, const MatrixPowerSeries& y) {
  if (x.matrix_size() != y.matrix_size())
    throw SizeMismatch("series_mul: matrix sizes " + std::to_string(x.matrix_size()) + " and " +
                       std::to_string(y.matrix_size()));
  return truncated_product(x, y, std::min(x.order(), y.order()));
}

MatrixPowerSeries series_log(const MatrixPowerSeries& x) {
  const std::size_t n = x.matrix_size();
  const std::size_t order = x.order();
  if (!(x[0] == RationalMatrix::identity(n)))
    throw BadConstantTerm("series_log: constant coefficient is not the identity");

  MatrixPowerSeries y = x;
  y[0] = RationalMatrix(n);

  MatrixPowerSeries result(n, order);
  MatrixPowerSeries power = y;  // y^m, whose coefficients below t^m vanish
  for (std::size_t m = 1; m <= order; ++m) {
    mpq_class c(m % 2 == 1 ? 1 : -1, static_cast<unsigned long>(m));
    for (std::size_t k = m; k <= order; ++k)
      if (!power[k].is_zero()) result[k] += c * power[k];
    if (m < order) power = truncated_product(power, y, order);
  }
  return result;
}

}  // namespace magnus_lab
