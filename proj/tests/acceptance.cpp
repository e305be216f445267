// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any FAIL.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <boost/math/special_functions/zeta.hpp>

#include "magnus_lab/bounds.hpp"
#include "magnus_lab/counterexamples.hpp"
#include "magnus_lab/sampling.hpp"
#include "reference_matrices.hpp"

using namespace magnus_lab;

namespace {

constexpr double kPi = std::numbers::pi;

struct Outcome {
  bool ok = true;
  std::string detail;
};

struct Criterion {
  int id;
  std::string name;
  double limit_seconds;
  std::function<Outcome()> run;
};

mpq_class ratio(long p, long q) {
  mpq_class r(p, static_cast<unsigned long>(q));
  r.canonicalize();
  return r;
}

// Plain Gauss elimination over Q, for an independent rank.
std::size_t rank_by_elimination(RationalMatrix m) {
  const std::size_t n = m.size();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < n && rank < n; ++col) {
    std::size_t pivot = rank;
    while (pivot < n && m(pivot, col) == 0) ++pivot;
    if (pivot == n) continue;
    for (std::size_t j = 0; j < n; ++j) std::swap(m(rank, j), m(pivot, j));
    for (std::size_t i = rank + 1; i < n; ++i) {
      const mpq_class f = m(i, col) / m(rank, col);
      for (std::size_t j = col; j < n; ++j) m(i, j) -= f * m(rank, j);
    }
    ++rank;
  }
  return rank;
}

RationalMatrix brute_product(std::size_t n, std::size_t k, const mpq_class& s) {
  RationalMatrix p = RationalMatrix::identity(n);
  for (std::size_t u = 1; u <= k; ++u) {
    RationalMatrix f = RationalMatrix::identity(n);
    for (std::size_t j = 1; j <= n; ++j)
      if (j != u) f(u - 1, j - 1) += j > u ? s : mpq_class(-s);
    p = p * f;
  }
  return p;
}

FloatMatrix triangular_exp(double a, double b) {
  const double off = a == 0.0 ? b : b * std::sinh(a) / a;
  return FloatMatrix{{std::exp(a), off}, {0.0, std::exp(-a)}};
}

double max_abs_diff(const FloatMatrix& a, const FloatMatrix& b) {
  double d = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) d = std::max(d, std::abs(a(i, j) - b(i, j)));
  return d;
}

std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

Outcome c01() {
  const bool eq = rexp_exact(psi_measure(5)) == test_support::rexp_psi_literal(5);
  return {eq, eq ? "25 entries equal" : "entry mismatch"};
}

Outcome c02() {
  const bool two = rexp_exact(psi_measure(2)) == test_support::rexp_psi_literal(2);
  const bool three = rexp_exact(psi_measure(3)) == test_support::rexp_psi_literal(3);
  return {two && three, std::string("psi_2 ") + (two ? "ok" : "mismatch") + ", psi_3 " + (three ? "ok" : "mismatch")};
}

Outcome c03() {
  Outcome o;
  for (long n = 2; n <= 12; ++n) {
    const auto un = static_cast<std::size_t>(n);
    const RationalMatrix p = rexp_exact(psi_measure(un));
    bool eigen = true;
    for (std::size_t i = 0; i < un; ++i) {
      mpq_class row = 0;
      for (std::size_t j = 0; j < un; ++j) row += p(i, j);
      eigen = eigen && row == -1;
    }
    const std::size_t rank = rank_by_elimination(p + RationalMatrix::identity(un));
    const DivergenceCertificate c = certify_divergence(un);
    const mpq_class cumulative = *cumulative_norm(psi_measure(un), NormKind::L1_OP).exact;
    const bool ok = eigen && rank == un - 1 && c.gm_minus_one == 1 && c.rank_p_plus_id == rank &&
                    c.parity_verdict && cumulative == ratio(2 * n, n - 1);
    if (!ok) {
      o.ok = false;
      o.detail += "n=" + std::to_string(n) + " failed; ";
    }
  }
  if (o.ok) o.detail = "n=2..12: Pv=-v, rank(P+I)=n-1, verdict true, norm 2n/(n-1)";
  return o;
}

Outcome c04() {
  std::size_t checked = 0, bad = 0;
  for (std::size_t n = 1; n <= 8; ++n)
    for (std::size_t k = 1; k <= n; ++k)
      for (const auto& s : {ratio(1, 3), ratio(2, 1), ratio(7, 5), ratio(4, 1)}) {
        ++checked;
        bad += partial_product_closed_form(n, k, s) != brute_product(n, k, s);
      }
  return {bad == 0, std::to_string(checked - bad) + "/" + std::to_string(checked) + " products equal"};
}

Outcome c05() {
  double worst = 0;
  const MinimalMagnusTerms b = minimal_magnus_terms(MinimalPair(0, 1), 16);
  for (int j = 1; j <= 8; ++j) {
    const double expect = -4 * std::pow(-1.0, j) * (1 - std::ldexp(1.0, -2 * j)) * boost::math::zeta(2.0 * j);
    worst = std::max(worst, std::abs(b.terms[2 * j - 1](0, 1) - expect));
  }
  for (int sign : {1, -1}) {
    const MinimalMagnusTerms u = minimal_magnus_terms(MinimalPair(sign, 1), 13);
    worst = std::max(worst, std::abs(u.terms[0](0, 1) - (-sign * kPi)));
    worst = std::max(worst, std::abs(u.terms[1](0, 1) - kPi * kPi));
    for (int j = 1; j <= 6; ++j) {
      const double expect = sign * std::pow(-1.0, j) * 2 * kPi * boost::math::zeta(2.0 * j);
      worst = std::max(worst, std::abs(u.terms[2 * j](0, 1) - expect));
    }
  }
  return {worst <= 1e-10, "max deviation " + fmt(worst)};
}

Outcome c06() {
  Outcome o;
  bool some_limit_nonzero = false;
  for (const auto& q : {ratio(0, 1), ratio(1, 3), ratio(1, 1)}) {
    const MinimalPair p(q, 1);
    const MinimalMagnusTerms t = minimal_magnus_terms(p, 40);
    auto diff = [&](std::size_t k) { return std::abs(t.terms[k - 1](0, 1) - minimal_term_asymptote(p, k)(0, 1)); };
    double c = 0;
    for (std::size_t k = 10; k <= 20; ++k) c = std::max(c, diff(k) * std::ldexp(1.0, static_cast<int>(k)));
    bool bounded = true;
    for (std::size_t k = 10; k <= 40; ++k) bounded = bounded && diff(k) <= c * std::ldexp(1.0, -static_cast<int>(k)) + 1e-13;
    const double even = std::abs(minimal_term_asymptote(p, 40)(0, 1));
    const double odd = std::abs(minimal_term_asymptote(p, 39)(0, 1));
    some_limit_nonzero = some_limit_nonzero || even > 0 || odd > 0;
    o.ok = o.ok && bounded && (even > 0 || odd > 0);
    o.detail += "alpha/pi=" + rational_to_string(q) + ": C=" + fmt(c) + (bounded ? "" : " (bound broken)") +
                ", limits " + fmt(even) + "/" + fmt(odd) + "; ";
  }
  return o;
}

Outcome c07() {
  double worst = 0;
  for (const auto& [q, e] : {std::pair{ratio(0, 1), ratio(1, 1)}, std::pair{ratio(1, 3), ratio(1, 1)},
                             std::pair{ratio(-1, 2), ratio(-2, 1)}, std::pair{ratio(1, 1), ratio(1, 2)},
                             std::pair{ratio(-1, 1), ratio(3, 1)}}) {
    const MinimalPair p(q, e);
    const auto [m1, m2] = minimal_pair_matrices(p);
    for (double t : {0.1, 0.3, 0.7}) {
      const FloatMatrix oracle = triangular_exp(t * m1(0, 0), t * m1(0, 1)) * triangular_exp(t * m2(0, 0), t * m2(0, 1));
      const FloatMatrix via_log = exp_float(minimal_log_closed_form(p, t));
      worst = std::max(worst, max_abs_diff(via_log, oracle));
    }
    for (double t : {0.1, 0.3, 0.7}) {
      const FloatMatrix ordered = exp_float(t * m1) * exp_float(t * m2);
      worst = std::max(worst, max_abs_diff(exp_float(minimal_log_closed_form(p, t)), ordered));
    }
  }
  return {worst <= 1e-9, "max deviation " + fmt(worst) + " over 5 pairs x 3 times"};
}

Outcome c08() {
  const double l3 = solve_lambda(kPi);
  const bool ok = std::abs(l3 - 0.0588740902) <= 1e-8 && l3 > 1.0 / 17;
  char buf[96];
  std::snprintf(buf, sizeof buf, "Lambda_3 = %.12f", l3);
  return {ok, buf};
}

Outcome c09() {
  double worst = 0;
  std::size_t chain_breaks = 0;
  for (int n = 3; n <= 10000; ++n) {
    const double a = rogers_theta(n, ThetaVariant::R1);
    const double b = rogers_theta(n, ThetaVariant::R2);
    const double c = rogers_theta(n, ThetaVariant::R3);
    const double d = rogers_theta(n, ThetaVariant::R4);
    chain_breaks += !(a <= b && b < c && c < d);
    worst = std::max(worst, std::abs(a - rogers_theta_r1_direct(n)) / a);
  }
  return {chain_breaks == 0 && worst <= 1e-8,
          std::to_string(chain_breaks) + " chain breaks, max rel. gap Lambert/direct " + fmt(worst)};
}

Outcome c10() {
  MeasureSampler sampler(0);
  const double lams[] = {0.1, 0.25, 0.5};
  std::size_t violations = 0;
  double worst_ratio = 0;
  const double coef = std::pow(2.0, -3) / 4 * (0.5 / std::exp(1.0)) / rogers_theta(4, ThetaVariant::R1);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto steps = static_cast<std::size_t>(sampler.uniform_int(1, 6));
    const StepMeasure phi = sampler.unit_density_measure(2, steps, NormKind::L1_OP);
    const mpq_class omega = *cumulative_norm(phi, NormKind::L1_OP).exact;
    for (double lam : lams) {
      const mpq_class lhs = *op_norm(weighted_second_term(phi, mpq_class(lam)), NormKind::L1_OP).exact;
      const double bound = gain_bound(4, lam, omega.get_d());
      const double formula = omega.get_d() * omega.get_d() / 2 * (1 - coef * std::min(lam, 1 - lam));
      violations += lhs > mpq_class(bound) || std::abs(bound - formula) > 1e-12 * formula;
      worst_ratio = std::max(worst_ratio, lhs.get_d() / bound);
    }
  }
  return {violations == 0, std::to_string(violations) + " violations in 3000 checks, max |W|/bound " + fmt(worst_ratio)};
}

Outcome c11() {
  std::size_t bad = 0;
  for (int n = 9; n <= 200; ++n) {
    const MagnusRadius m = magnus_radius(n);
    bad += !(m.excess > 0 && m.radius <= c_upper_bound(n));
  }
  double prev = 0;
  for (int d = 3; d <= 200; ++d) {
    const double v = lambda_lower_bound(d);
    bad += v < prev;
    prev = v;
  }
  return {bad == 0, std::to_string(bad) + " violations; radius(9) excess " + fmt(magnus_radius(9).excess) +
                        ", radius(200) log10 excess " + fmt(magnus_radius(200).log10_excess)};
}

Outcome c12() {
  MeasureSampler sampler(0);
  std::size_t failures = 0;
  double worst = 0;
  constexpr std::size_t kOrder = 32;
  for (int trial = 0; trial < 100; ++trial) {
    const auto steps = static_cast<std::size_t>(sampler.uniform_int(2, 5));
    const StepMeasure raw = sampler.upper_triangular_measure(steps);
    // mu_k is homogeneous of degree k, so rescaling to norm 0.9 pi multiplies mu_k by c^k
    const double c = 0.9 * kPi / cumulative_norm(raw, NormKind::L1_OP).value;
    const MagnusTermSequence mu = magnus_terms(raw, kOrder);
    bool ok = true;
    for (std::size_t k = 10; k <= 30; k += 2) {
      const double num = op_norm(mu.mu(k + 2), NormKind::L1_OP).value;
      const double den = op_norm(mu.mu(k), NormKind::L1_OP).value;
      const double r = den == 0.0 ? (num == 0.0 ? 0.0 : INFINITY) : c * c * num / den;
      worst = std::max(worst, r);
      ok = ok && r < 1.0;
    }
    failures += !ok;
  }
  return {failures == 0, std::to_string(failures) + "/100 measures with a ratio >= 1, max ratio " + fmt(worst)};
}

Outcome c13() {
  std::size_t bad = 0;
  const int n = 1024;
  std::vector<double> v(n);
  for (int i = 1; i < n; ++i) {
    const double lam = static_cast<double>(i) / n;
    v[i] = c_infinity(lam);
    bad += v[i] != c_infinity(1 - lam);
    bad += v[i] < 2 + (8.0 / 3.0) * (lam - 0.5) * (lam - 0.5);
  }
  for (int i = 1; i < n; ++i)
    for (int j = i + 2; j < n; j += 2) bad += v[(i + j) / 2] > (v[i] + v[j]) / 2 * (1 + 1e-15);
  return {bad == 0, std::to_string(bad) + " violations on the grid i/1024"};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "rexp_psi5_exact", 1, c01},
      {2, "rexp_psi2_psi3_exact", 1, c02},
      {3, "divergence_certificates_n2_12", 5, c03},
      {4, "partial_products_closed_form", 5, c04},
      {5, "minimal_series_coefficients", 10, c05},
      {6, "minimal_terms_asymptote_rate", 30, c06},
      {7, "closed_form_log_round_trip", 5, c07},
      {8, "lambda3_value", 1, c08},
      {9, "rogers_chain", 10, c09},
      {10, "gain_bound_dominance", 30, c10},
      {11, "radius_sanity", 5, c11},
      {12, "convergent_side_decay", 60, c12},
      {13, "c_infinity_profile", 5, c13},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs <= c.limit_seconds;
    const bool pass = o.ok && in_time;
    failed += !pass;
    std::printf("[%s] %02d %-32s %8.3fs (limit %gs)%s  %s\n", pass ? "PASS" : "FAIL", c.id, c.name.c_str(), secs,
                c.limit_seconds, in_time ? "" : " TOO SLOW", o.detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
