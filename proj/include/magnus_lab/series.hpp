#pragma once

#include <cstddef>
#include <vector>

#include "magnus_lab/matrix.hpp"

namespace magnus_lab {

/// Truncated power series sum_{k=0}^{order} t^k C_k with exact rational
/// matrix coefficients of a common size.
class MatrixPowerSeries {
 public:
  /// Zero series of the given matrix size and truncation order.
  MatrixPowerSeries(std::size_t n, std::size_t order);

  /// Throws SizeMismatch unless all coefficients share one size; requires at
  /// least one coefficient.
  explicit MatrixPowerSeries(std::vector<RationalMatrix> coeffs);

  /// The constant series Id (order K).
  static MatrixPowerSeries identity(std::size_t n, std::size_t order);

  std::size_t order() const noexcept { return coeffs_.size() - 1; }
  std::size_t matrix_size() const noexcept { return n_; }

  const RationalMatrix& operator[](std::size_t k) const { return coeffs_.at(k); }
  RationalMatrix& operator[](std::size_t k) { return coeffs_.at(k); }
  const std::vector<RationalMatrix>& coefficients() const noexcept { return coeffs_; }

  friend bool operator==(const MatrixPowerSeries&, const MatrixPowerSeries&) = default;

 private:
  std::size_t n_;
  std::vector<RationalMatrix> coeffs_;
};

/// exp(tA) truncated at t^K: coefficients A^j / j!.
MatrixPowerSeries series_exp(const RationalMatrix& a, std::size_t order);

/// Cauchy product truncated at min(order X, order Y).
MatrixPowerSeries series_mul(const MatrixPowerSeries& x, const MatrixPowerSeries& y);

/// Mercator logarithm sum_{m>=1} (-1)^{m+1} (X - Id)^m / m. Requires the
/// constant coefficient to be Id (BadConstantTerm otherwise).
MatrixPowerSeries series_log(const MatrixPowerSeries& x);

}  // namespace magnus_lab
