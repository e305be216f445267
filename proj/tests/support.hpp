#pragma once

#include <cmath>
#include <random>

#include <Eigen/Dense>

#include "magnus_lab/matrix.hpp"

namespace test_support {

using magnus_lab::FloatMatrix;
using magnus_lab::RationalMatrix;

// Separate generator from the library sampler so oracles never share code paths.
class Rng {
 public:
  explicit Rng(unsigned seed) : gen_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(gen_); }
  double real(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(gen_); }

  mpq_class rational(long max_num, long max_den) {
    mpq_class q(integer(-max_num, max_num), static_cast<unsigned long>(integer(1, max_den)));
    q.canonicalize();
    return q;
  }

  RationalMatrix matrix(std::size_t n, long max_num = 10, long max_den = 4) {
    RationalMatrix m(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = rational(max_num, max_den);
    return m;
  }

  // Random matrix of prescribed rank: product of n x r and r x n integer factors.
  RationalMatrix low_rank(std::size_t n, std::size_t r) {
    RationalMatrix m(n);
    std::vector<long> left(n * r), right(r * n);
    for (auto& x : left) x = integer(-3, 3);
    for (auto& x : right) x = integer(-3, 3);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        long s = 0;
        for (std::size_t k = 0; k < r; ++k) s += left[i * r + k] * right[k * n + j];
        m(i, j) = s;
      }
    return m;
  }

  FloatMatrix float_matrix(std::size_t n, double scale) {
    FloatMatrix m(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = real(-scale, scale);
    return m;
  }

 private:
  std::mt19937 gen_;
};

inline Eigen::MatrixXd to_eigen(const RationalMatrix& m) {
  Eigen::MatrixXd e(m.size(), m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) e(i, j) = m(i, j).get_d();
  return e;
}

inline Eigen::MatrixXd to_eigen(const FloatMatrix& m) {
  Eigen::MatrixXd e(m.size(), m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) e(i, j) = m(i, j);
  return e;
}

inline double max_abs_diff(const FloatMatrix& a, const FloatMatrix& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) d = std::max(d, std::abs(a(i, j) - b(i, j)));
  return d;
}

inline RationalMatrix rat(std::initializer_list<std::initializer_list<long>> rows) {
  RationalMatrix m(rows.size());
  std::size_t i = 0;
  for (const auto& r : rows) {
    std::size_t j = 0;
    for (long x : r) m(i, j++) = x;
    ++i;
  }
  return m;
}

}  // namespace test_support
