#include "magnus_lab/counterexamples.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "magnus_lab/special_functions.hpp"

namespace magnus_lab {

namespace {

constexpr double kPi = std::numbers::pi;

double sign_of(const mpq_class& q) { return sgn(q) < 0 ? -1.0 : 1.0; }

}  // namespace

MinimalPair::MinimalPair(mpq_class alpha_over_pi, mpq_class eps)
    : alpha_over_pi_(std::move(alpha_over_pi)), eps_(std::move(eps)) {
  alpha_over_pi_.canonicalize();
  eps_.canonicalize();
  if (alpha_over_pi_ < -1 || alpha_over_pi_ > 1)
    throw DomainError("minimal pair: alpha must lie in [-pi, pi]");
  if (eps_ == 0) throw DomainError("minimal pair: eps must be nonzero");
}

MinimalPair MinimalPair::from_radians(double alpha, double eps) {
  if (!std::isfinite(alpha) || !std::isfinite(eps))
    throw DomainError("minimal pair: non-finite parameter");
  return MinimalPair(mpq_class(alpha / kPi), mpq_class(eps));
}

double MinimalPair::alpha() const { return to_double(alpha_over_pi_) * kPi; }
double MinimalPair::eps_value() const { return to_double(eps_); }

bool MinimalPair::totally_unbalanced() const { return abs(alpha_over_pi_) == 1; }

std::pair<RationalMatrix, RationalMatrix> minimal_pair_unit_matrices(const MinimalPair& p) {
  const mpq_class& q = p.alpha_over_pi();
  const mpq_class& e = p.eps();
  const mpq_class minus = (1 - q) / 2;  // (pi - a) / (2 pi)
  const mpq_class plus = (1 + q) / 2;   // (pi + a) / (2 pi)
  RationalMatrix m1{{minus, -plus * e}, {0, -minus}};
  RationalMatrix m2{{plus, minus * e}, {0, -plus}};
  return {m1, m2};
}

std::pair<FloatMatrix, FloatMatrix> minimal_pair_matrices(const MinimalPair& p) {
  auto [u1, u2] = minimal_pair_unit_matrices(p);
  return {kPi * to_float(u1), kPi * to_float(u2)};
}

StepMeasure minimal_pair_unit_measure(const MinimalPair& p) {
  auto [u1, u2] = minimal_pair_unit_matrices(p);
  return StepMeasure({Step{u1, 1}, Step{u2, 1}});
}

MinimalMagnusTerms minimal_magnus_terms(const MinimalPair& p, std::size_t order) {
  MinimalMagnusTerms out;
  out.unit_terms = magnus_terms(minimal_pair_unit_measure(p), order);
  out.terms.reserve(order);
  double scale = 1.0;
  for (const auto& unit : out.unit_terms.terms) {
    scale *= kPi;
    out.terms.push_back(scale * to_float(unit));
  }
  return out;
}

PairNorms minimal_pair_norms(const MinimalPair& p, NormKind kind) {
  auto [m1, m2] = minimal_pair_matrices(p);
  return {op_norm(m1, kind), op_norm(m2, kind)};
}

double minimal_cumulative_norm_closed_form(const MinimalPair& p, NormKind kind) {
  const double e = std::abs(p.eps_value());
  if (kind != NormKind::L2_OP) return kPi + kPi * e;
  const double a = p.alpha();
  const double minus = (kPi - a) / 2, plus = (kPi + a) / 2;
  return kPi * e / 2 + std::sqrt(minus * minus + plus * plus * e * e / 4) +
         std::sqrt(plus * plus + minus * minus * e * e / 4);
}

FloatMatrix minimal_log_closed_form(const MinimalPair& p, double t) {
  if (t == 0.0) return FloatMatrix(2);
  const double e = p.eps_value();
  double off;
  if (p.totally_unbalanced()) {
    const double s = sign_of(p.alpha_over_pi());
    off = -s * kPi * t * e * beta(s * 2 * kPi * t);
  } else {
    const double a = p.alpha();
    const double sh = std::sinh(t * kPi);
    off = t * e * kPi *
          ((kPi * kPi + a * a) * (std::cosh(t * kPi) - std::exp(-t * a)) - 2 * a * kPi * sh) /
          ((kPi * kPi - a * a) * sh);
  }
  FloatMatrix m{{kPi * t, off}, {0.0, -kPi * t}};
  if (!is_finite(m))
    throw PoleError("minimal_log_closed_form: evaluation at t = " + std::to_string(t) +
                    " is not finite");
  return m;
}

FloatMatrix minimal_term_asymptote(const MinimalPair& p, std::size_t k) {
  if (k < 2) throw DomainError("minimal_term_asymptote: requires k >= 2");
  const double e = p.eps_value();
  double value;
  if (p.totally_unbalanced()) {
    const double s = sign_of(p.alpha_over_pi());
    value = k % 2 == 0 ? 0.0 : s * ((k - 1) / 2 % 2 == 0 ? 1.0 : -1.0) * 2 * kPi * e;
  } else {
    const double a = p.alpha();
    const double amplitude = 2 * (kPi * kPi + a * a) * e / (kPi * kPi - a * a);
    if (k % 2 == 0) {
      const double sign = (k / 2) % 2 == 0 ? 1.0 : -1.0;
      value = -sign * amplitude * (1 + std::cos(a));
    } else {
      const double sign = ((k + 1) / 2) % 2 == 0 ? 1.0 : -1.0;
      value = -sign * amplitude * std::sin(a);
    }
  }
  return FloatMatrix{{0.0, value}, {0.0, 0.0}};
}

namespace {

double norm_ratio(double alpha, double eps, NormKind kind) {
  const double minus = (kPi - alpha) / 2, plus = (kPi + alpha) / 2;
  const FloatMatrix m1{{minus, -plus * eps}, {0.0, -minus}};
  const FloatMatrix m2{{plus, minus * eps}, {0.0, -plus}};
  return op_norm(m1, kind) / op_norm(m2, kind);
}

double bisect(double lo, double hi, double rho, double eps, NormKind kind) {
  double f_lo = norm_ratio(lo, eps, kind) - rho;
  for (int iter = 0; iter < 200 && hi - lo > 1e-15; ++iter) {
    const double mid = 0.5 * (lo + hi);
    const double f_mid = norm_ratio(mid, eps, kind) - rho;
    if (f_mid == 0.0) return mid;
    if ((f_mid < 0) == (f_lo < 0)) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
    }
  }
  const double f_hi = norm_ratio(hi, eps, kind) - rho;
  return std::abs(f_lo) <= std::abs(f_hi) ? lo : hi;
}

}  // namespace

double find_alpha_for_ratio(double rho, double eps, NormKind kind) {
  if (!(rho > 0) || !std::isfinite(rho)) throw DomainError("find_alpha_for_ratio: rho must be positive");
  if (eps == 0.0 || !std::isfinite(eps)) throw DomainError("find_alpha_for_ratio: eps must be nonzero");
  constexpr double tolerance = 1e-9;

  if (std::abs(norm_ratio(0.0, eps, kind) - rho) <= tolerance * 1e-3) return 0.0;

  const double r_lo = norm_ratio(-kPi, eps, kind);
  const double r_hi = norm_ratio(kPi, eps, kind);
  const double lo_end = std::min(r_lo, r_hi), hi_end = std::max(r_lo, r_hi);
  if (rho < lo_end - tolerance || rho > hi_end + tolerance)
    throw RatioUnreachable("ratio " + std::to_string(rho) + " outside [" + std::to_string(lo_end) +
                           ", " + std::to_string(hi_end) + "]; shrink eps");

  double alpha = bisect(-kPi, kPi, rho, eps, kind);
  if (std::abs(norm_ratio(alpha, eps, kind) - rho) <= tolerance) return alpha;

  // Not monotone: scan for a sign change and bisect locally.
  constexpr int grid = 4000;
  double prev_alpha = -kPi;
  double prev = norm_ratio(prev_alpha, eps, kind) - rho;
  for (int i = 1; i <= grid; ++i) {
    const double a = -kPi + 2 * kPi * i / grid;
    const double f = norm_ratio(a, eps, kind) - rho;
    if (f == 0.0) return a;
    if ((f < 0) != (prev < 0)) {
      alpha = bisect(prev_alpha, a, rho, eps, kind);
      if (std::abs(norm_ratio(alpha, eps, kind) - rho) <= tolerance) return alpha;
    }
    prev_alpha = a;
    prev = f;
  }
  throw RatioUnreachable("find_alpha_for_ratio: no alpha found for ratio " + std::to_string(rho));
}

RationalMatrix q_matrix(std::size_t n, std::size_t u) {
  if (n < 1 || u < 1 || u > n)
    throw IndexOutOfRange("q_matrix: need 1 <= u <= n, got u = " + std::to_string(u) +
                          ", n = " + std::to_string(n));
  RationalMatrix q(n);
  for (std::size_t j = 1; j <= n; ++j) q(u - 1, j - 1) = j > u ? 1 : (j < u ? -1 : 0);
  return q;
}

StepMeasure psi_measure(std::size_t n) {
  if (n < 2) throw DomainError("psi_measure: requires n >= 2");
  mpq_class scale(2, static_cast<unsigned long>(n - 1));
  scale.canonicalize();
  std::vector<Step> steps;
  steps.reserve(n);
  for (std::size_t k = 1; k <= n; ++k) steps.push_back(Step{scale * q_matrix(n, k), 1});
  return StepMeasure(std::move(steps));
}

RationalMatrix partial_product_closed_form(std::size_t n, std::size_t k, const mpq_class& s) {
  if (k < 1 || k > n)
    throw IndexOutOfRange("partial_product_closed_form: need 1 <= k <= n");
  const mpq_class base = s + 1;
  // Every exponent below is nonnegative: k - i >= 0, and j - i - 1 >= 0 when i < j.
  auto power = [&](long e) {
    mpq_class r;
    mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(e));
    r.canonicalize();
    return r;
  };

  RationalMatrix p(n);
  for (std::size_t i = 1; i <= k; ++i) {
    const long ki = static_cast<long>(k) - static_cast<long>(i);
    const mpq_class b = power(ki) - power(ki + 1);
    for (std::size_t j = 1; j <= k; ++j) {
      const long d = static_cast<long>(j) - static_cast<long>(i);
      mpq_class a = 0;
      if (i < j) a = power(d + 1) - power(d - 1);
      else if (i == j) a = base;
      p(i - 1, j - 1) = a + b;
    }
    for (std::size_t j = k + 1; j <= n; ++j) p(i - 1, j - 1) = -b;
  }
  for (std::size_t i = k + 1; i <= n; ++i) p(i - 1, i - 1) = 1;
  return p;
}

RationalMatrix product_matrix(const ParabolicFamily& f) {
  if (f.n < 1) throw DomainError("product_matrix: requires n >= 1");
  return partial_product_closed_form(f.n, f.n, f.s);
}

DivergenceCertificate certify_matrix(const RationalMatrix& p) {
  const std::size_t n = p.size();
  DivergenceCertificate c;
  c.n = n;

  bool eigen = true;
  for (std::size_t i = 0; i < n && eigen; ++i) {
    mpq_class row = 0;
    for (std::size_t j = 0; j < n; ++j) row += p(i, j);
    eigen = row == -1;
  }
  c.eigencheck = eigen;

  const RationalMatrix id = RationalMatrix::identity(n);
  c.rank_p_plus_id = rank_exact(p + id);
  c.gm_minus_one = n - c.rank_p_plus_id;
  c.parity_verdict = c.gm_minus_one % 2 == 1;

  RationalMatrix form(n);
  mpq_class inv_n(1, static_cast<unsigned long>(n));
  inv_n.canonicalize();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) form(i, j) = (i == j ? mpq_class(1) : mpq_class(0)) - inv_n;
  c.invariance_check = p.transpose() * form * p == form;
  return c;
}

DivergenceCertificate certify_divergence(std::size_t n) {
  if (n < 2) throw DomainError("certify_divergence: requires n >= 2");
  DivergenceCertificate c = certify_matrix(rexp_exact(psi_measure(n)));
  if (!c.eigencheck)
    throw CertificateFailed("certify_divergence: all-ones vector is not a -1 eigenvector for n = " +
                            std::to_string(n));
  return c;
}

}  // namespace magnus_lab
