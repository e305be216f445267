#include "magnus_lab/linalg.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

namespace magnus_lab {

std::string_view to_string(NormKind kind) {
  switch (kind) {
    case NormKind::L1_OP: return "l1";
    case NormKind::LINF_OP: return "linf";
    case NormKind::L2_OP: return "l2";
  }
  return "?";
}

NormKind parse_norm_kind(std::string_view text) {
  std::string t(text);
  std::transform(t.begin(), t.end(), t.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (t == "l1") return NormKind::L1_OP;
  if (t == "linf") return NormKind::LINF_OP;
  if (t == "l2") return NormKind::L2_OP;
  throw ParseError("unknown norm '" + std::string(text) + "' (expected l1, linf or l2)");
}

namespace {

template <class T>
T max_column_sum(const SquareMatrix<T>& m) {
  using std::abs;
  T best(0);
  for (std::size_t j = 0; j < m.size(); ++j) {
    T s(0);
    for (std::size_t i = 0; i < m.size(); ++i) s += abs(m(i, j));
    if (s > best) best = s;
  }
  return best;
}

template <class T>
T max_row_sum(const SquareMatrix<T>& m) {
  using std::abs;
  T best(0);
  for (std::size_t i = 0; i < m.size(); ++i) {
    T s(0);
    for (std::size_t j = 0; j < m.size(); ++j) s += abs(m(i, j));
    if (s > best) best = s;
  }
  return best;
}

double euclidean(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

std::vector<double> mat_vec(const FloatMatrix& m, const std::vector<double>& v) {
  std::vector<double> r(m.size(), 0.0);
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) r[i] += m(i, j) * v[j];
  return r;
}

// Largest singular value of a 2x2 matrix from its Frobenius norm and
// determinant: sigma^2 = (F^2 + sqrt(F^4 - 4 det^2)) / 2.
double spectral_norm_2x2(const FloatMatrix& m) {
  const double a = m(0, 0), b = m(0, 1), c = m(1, 0), d = m(1, 1);
  const double f2 = a * a + b * b + c * c + d * d;
  const double det = a * d - b * c;
  const double disc = std::max(0.0, (f2 - 2.0 * std::abs(det)) * (f2 + 2.0 * std::abs(det)));
  return std::sqrt((f2 + std::sqrt(disc)) / 2.0);
}

// Power iteration on M^T M, tolerance 1e-12, at most 1e4 steps.
double spectral_norm_power(const FloatMatrix& m) {
  const std::size_t n = m.size();
  if (m.is_zero()) return 0.0;
  const FloatMatrix mt = m.transpose();
  std::vector<double> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = 1.0 + static_cast<double>(i) / (std::numbers::pi * n);
  double sigma = 0.0;
  for (int iter = 0; iter < 10000; ++iter) {
    const double vn = euclidean(v);
    for (double& x : v) x /= vn;
    const std::vector<double> mv = mat_vec(m, v);
    const double next = euclidean(mv) / euclidean(v);
    std::vector<double> w = mat_vec(mt, mv);
    if (euclidean(w) == 0.0) return next;
    const bool converged = std::abs(next - sigma) <= 1e-12 * next;
    sigma = next;
    v = std::move(w);
    if (converged) break;
  }
  return sigma;
}

}  // namespace

NormValue op_norm(const RationalMatrix& m, NormKind kind) {
  switch (kind) {
    case NormKind::L1_OP: {
      mpq_class q = max_column_sum(m);
      return {to_double(q), q};
    }
    case NormKind::LINF_OP: {
      mpq_class q = max_row_sum(m);
      return {to_double(q), q};
    }
    case NormKind::L2_OP:
      return {op_norm(to_float(m), kind), std::nullopt};
  }
  return {};
}

double op_norm(const FloatMatrix& m, NormKind kind) {
  switch (kind) {
    case NormKind::L1_OP: return max_column_sum(m);
    case NormKind::LINF_OP: return max_row_sum(m);
    case NormKind::L2_OP:
      if (m.size() == 1) return std::abs(m(0, 0));
      if (m.size() == 2) return spectral_norm_2x2(m);
      return spectral_norm_power(m);
  }
  return 0.0;
}

std::size_t rank_exact(const RationalMatrix& m) {
  const std::size_t n = m.size();
  // Clear denominators row by row; rank is unchanged.
  std::vector<mpz_class> a(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    mpz_class l = 1;
    for (std::size_t j = 0; j < n; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
    for (std::size_t j = 0; j < n; ++j) a[i * n + j] = m(i, j).get_num() * (l / m(i, j).get_den());
  }
  auto at = [&](std::size_t i, std::size_t j) -> mpz_class& { return a[i * n + j]; };

  std::size_t rank = 0;
  mpz_class previous_pivot = 1;
  for (std::size_t col = 0; col < n && rank < n; ++col) {
    std::size_t pivot_row = rank;
    while (pivot_row < n && at(pivot_row, col) == 0) ++pivot_row;
    if (pivot_row == n) continue;
    if (pivot_row != rank)
      for (std::size_t j = 0; j < n; ++j) std::swap(at(pivot_row, j), at(rank, j));
    const mpz_class pivot = at(rank, col);
    for (std::size_t i = rank + 1; i < n; ++i) {
      const mpz_class factor = at(i, col);
      for (std::size_t j = col + 1; j < n; ++j) {
        mpz_class t = pivot * at(i, j) - factor * at(rank, j);
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), previous_pivot.get_mpz_t());
        at(i, j) = std::move(t);
      }
      at(i, col) = 0;
    }
    previous_pivot = pivot;
    ++rank;
  }
  return rank;
}

std::size_t geometric_multiplicity(const RationalMatrix& m, const mpq_class& lam) {
  return m.size() - rank_exact(m - lam * RationalMatrix::identity(m.size()));
}

bool is_nilpotent(const RationalMatrix& m) {
  // M^n = 0 iff M^(2^k) = 0 for the first 2^k >= n.
  RationalMatrix p = m;
  std::size_t power = 1;
  while (power < m.size()) {
    if (p.is_zero()) return true;
    p = p * p;
    power *= 2;
  }
  return p.is_zero();
}

RationalMatrix exp_nilpotent(const RationalMatrix& m) {
  if (!is_nilpotent(m)) throw NotNilpotent("exp_nilpotent: matrix is not nilpotent");
  const std::size_t n = m.size();
  RationalMatrix result = RationalMatrix::identity(n);
  RationalMatrix term = RationalMatrix::identity(n);
  for (std::size_t j = 1; j < n; ++j) {
    term = term * m;
    if (term.is_zero()) break;
    term *= mpq_class(1, static_cast<unsigned long>(j));
    result += term;
  }
  return result;
}

FloatMatrix exp_float(const FloatMatrix& m) {
  if (!is_finite(m)) throw DomainError("exp_float: non-finite entry");
  const std::size_t n = m.size();
  const double norm = op_norm(m, NormKind::L1_OP);
  int squarings = 0;
  if (norm > 0.5) squarings = static_cast<int>(std::ceil(std::log2(norm / 0.5)));
  const FloatMatrix a = m * std::ldexp(1.0, -squarings);

  FloatMatrix result = FloatMatrix::identity(n);
  FloatMatrix term = FloatMatrix::identity(n);
  for (int k = 1; k <= 30; ++k) {
    term = term * a;
    term *= 1.0 / k;
    result += term;
    if (op_norm(term, NormKind::L1_OP) <= 1e-18 * op_norm(result, NormKind::L1_OP)) break;
  }
  for (int s = 0; s < squarings; ++s) result = result * result;
  return result;
}

FloatMatrix inverse(const FloatMatrix& m) {
  const std::size_t n = m.size();
  FloatMatrix a = m;
  FloatMatrix inv = FloatMatrix::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = col;
    for (std::size_t i = col + 1; i < n; ++i)
      if (std::abs(a(i, col)) > std::abs(a(p, col))) p = i;
    if (a(p, col) == 0.0) throw SingularPencil("inverse: singular matrix");
    if (p != col)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(p, j), a(col, j));
        std::swap(inv(p, j), inv(col, j));
      }
    const double pivot = a(col, col);
    for (std::size_t j = 0; j < n; ++j) {
      a(col, j) /= pivot;
      inv(col, j) /= pivot;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col) continue;
      const double f = a(i, col);
      if (f == 0.0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) -= f * a(col, j);
        inv(i, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

namespace {

struct GaussLegendreRule {
  std::vector<double> nodes;    // on [0, 1]
  std::vector<double> weights;  // sum to 1
};

GaussLegendreRule gauss_legendre_unit(int count) {
  GaussLegendreRule rule;
  rule.nodes.resize(count);
  rule.weights.resize(count);
  for (int i = 0; i < count; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (count + 0.5));
    double derivative = 1.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= count; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      derivative = count * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / derivative;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    rule.nodes[i] = 0.5 * (1.0 - x);
    rule.weights[i] = 1.0 / ((1.0 - x * x) * derivative * derivative);
  }
  return rule;
}

}  // namespace

FloatMatrix log_integral(const FloatMatrix& a, int nodes, double condition_limit) {
  if (nodes < 2) throw DomainError("log_integral: need at least 2 quadrature nodes");
  if (!is_finite(a)) throw DomainError("log_integral: non-finite entry");
  const std::size_t n = a.size();
  const FloatMatrix id = FloatMatrix::identity(n);
  const FloatMatrix shifted = a - id;
  const GaussLegendreRule rule = gauss_legendre_unit(nodes);

  FloatMatrix sum(n);
  for (int k = 0; k < nodes; ++k) {
    const double lam = rule.nodes[k];
    const FloatMatrix pencil = lam * id + (1.0 - lam) * a;
    FloatMatrix resolvent;
    try {
      resolvent = inverse(pencil);
    } catch (const SingularPencil&) {
      throw SingularPencil("log_integral: singular resolvent at lambda = " + std::to_string(lam));
    }
    const double condition = op_norm(pencil, NormKind::L1_OP) * op_norm(resolvent, NormKind::L1_OP);
    if (!(condition <= condition_limit))
      throw SingularPencil("log_integral: resolvent condition " + std::to_string(condition) +
                           " at lambda = " + std::to_string(lam));
    sum += rule.weights[k] * (shifted * resolvent);
  }
  // A pencil that goes singular strictly between two nodes keeps every
  // sampled condition moderate, but the integral then diverges and the sum
  // no longer exponentiates back to A.
  const double residual = op_norm(exp_float(sum) - a, NormKind::L1_OP);
  if (!(residual <= 1e-6 * std::max(1.0, op_norm(a, NormKind::L1_OP))))
    throw SingularPencil("log_integral: exp(result) misses the input by " + std::to_string(residual) +
                         "; the spectrum likely meets (-inf, 0]");
  return sum;
}

}  // namespace magnus_lab
