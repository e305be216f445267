#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "magnus_lab/error.hpp"

namespace magnus_lab {

/// Dense square matrix in row-major storage.
///
/// Instantiated for `mpq_class` (exact rationals) and `double`. Arithmetic
/// never mutates its operands; all operations return fresh values.
template <class T>
class SquareMatrix {
 public:
  using value_type = T;

  SquareMatrix() = default;

  explicit SquareMatrix(std::size_t n) : n_(n), data_(n * n, T(0)) {}

  SquareMatrix(std::initializer_list<std::initializer_list<T>> rows)
      : n_(rows.size()), data_() {
    data_.reserve(n_ * n_);
    for (const auto& row : rows) {
      if (row.size() != n_) throw SizeMismatch("matrix literal is not square");
      for (const auto& x : row) data_.push_back(x);
    }
  }

  static SquareMatrix identity(std::size_t n) {
    SquareMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t size() const noexcept { return n_; }
  bool empty() const noexcept { return n_ == 0; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

  std::span<const T> values() const noexcept { return data_; }

  bool is_zero() const {
    for (const auto& x : data_)
      if (x != 0) return false;
    return true;
  }

  T trace() const {
    T t(0);
    for (std::size_t i = 0; i < n_; ++i) t += (*this)(i, i);
    return t;
  }

  SquareMatrix transpose() const {
    SquareMatrix r(n_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) r(j, i) = (*this)(i, j);
    return r;
  }

  SquareMatrix& operator+=(const SquareMatrix& o) {
    check_same(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
  }

  SquareMatrix& operator-=(const SquareMatrix& o) {
    check_same(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
  }

  SquareMatrix& operator*=(const T& s) {
    for (auto& x : data_) x *= s;
    return *this;
  }

  friend SquareMatrix operator+(SquareMatrix a, const SquareMatrix& b) { return a += b; }
  friend SquareMatrix operator-(SquareMatrix a, const SquareMatrix& b) { return a -= b; }
  friend SquareMatrix operator*(SquareMatrix a, const T& s) { return a *= s; }
  friend SquareMatrix operator*(const T& s, SquareMatrix a) { return a *= s; }

  friend SquareMatrix operator-(SquareMatrix a) {
    for (auto& x : a.data_) x = -x;
    return a;
  }

  friend SquareMatrix operator*(const SquareMatrix& a, const SquareMatrix& b) {
    a.check_same(b);
    const std::size_t n = a.n_;
    SquareMatrix r(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) {
        const T& aik = a(i, k);
        if (aik == 0) continue;
        for (std::size_t j = 0; j < n; ++j) r(i, j) += aik * b(k, j);
      }
    return r;
  }

  friend bool operator==(const SquareMatrix& a, const SquareMatrix& b) {
    return a.n_ == b.n_ && a.data_ == b.data_;
  }

 private:
  void check_same(const SquareMatrix& o) const {
    if (o.n_ != n_)
      throw SizeMismatch("matrix sizes differ: " + std::to_string(n_) + " vs " +
                         std::to_string(o.n_));
  }

  std::size_t n_ = 0;
  std::vector<T> data_;
};

using RationalMatrix = SquareMatrix<mpq_class>;
using FloatMatrix = SquareMatrix<double>;

/// Rounds each rational entry to the nearest double.
FloatMatrix to_float(const RationalMatrix& m);

/// True when every entry is a finite double.
bool is_finite(const FloatMatrix& m);

/// Canonical "p/q" (or "p" for integers) text of a rational.
std::string rational_to_string(const mpq_class& q);

/// Parses "p/q", an integer, or a finite decimal such as "-0.125" or "1e-3"
/// into an exact rational.
mpq_class parse_rational(const std::string& text);

/// Double approximation of q (within one ulp).
double to_double(const mpq_class& q);

}  // namespace magnus_lab
