#include <doctest.h>

#include <cmath>
#include <numbers>

#include "magnus_lab/bounds.hpp"
#include "magnus_lab/special_functions.hpp"

using namespace magnus_lab;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kLambda3 = 0.0588740902;

double c_inf_oracle(double lam) { return std::log((1 - lam) / lam) / (1 - 2 * lam); }

// Ternary search on a fine log grid bracket; independent of the library's golden-section.
double theta_r1_oracle(int n) {
  auto f = [n](double log_eta) {
    const double eta = std::exp(log_eta);
    return std::pow(1 + eta, n) * (1 - n * log_eta);
  };
  double best = -std::log(n), best_val = f(best);
  for (int i = 0; i <= 4000; ++i) {
    const double x = -std::log(n) - 40.0 * i / 4000;
    if (f(x) < best_val) best_val = f(x), best = x;
  }
  double lo = best - 0.02, hi = std::min(best + 0.02, -std::log(n));
  for (int it = 0; it < 200; ++it) {
    const double m1 = lo + (hi - lo) / 3, m2 = hi - (hi - lo) / 3;
    (f(m1) < f(m2) ? hi : lo) = f(m1) < f(m2) ? m2 : m1;
  }
  return f((lo + hi) / 2);
}

double r2(int n) { return std::pow(1 + 1 / (n * std::log(n)), n) * (1 + n * std::log(n * std::log(n))); }
double r3(int n) { return n * std::log(n) + n * std::log(std::log(n)) + 2 * n + 1; }
double r4(int n) { return n * std::log(n) + n * std::log(std::log(n)) + 5 * n; }

}  // namespace

TEST_CASE("c_infinity values") {
  CHECK(c_infinity(0.5) == 2.0);
  CHECK(std::isinf(c_infinity(0.0)));
  CHECK(std::isinf(c_infinity(1.0)));
  CHECK(c_infinity(kLambda3) == doctest::Approx(kPi).epsilon(1e-8));
  CHECK_THROWS_AS(c_infinity(-0.1), DomainError);
  CHECK_THROWS_AS(c_infinity(1.1), DomainError);
  for (double lam : {0.01, 0.1, 0.3, 0.45, 0.499, 0.7, 0.99}) {
    CHECK(c_infinity(lam) == doctest::Approx(c_inf_oracle(lam)).epsilon(1e-12));
    CHECK(c_infinity(lam) == doctest::Approx(2 * std::atanh(1 - 2 * lam) / (1 - 2 * lam)).epsilon(1e-12));
  }
  // across the series switch the value is smooth
  for (double d : {1e-3, 5e-4, 4.99e-4, 1e-6, 1e-9}) {
    const double x = 2 * d;
    CHECK(c_infinity(0.5 - d) == doctest::Approx(2 + 2 * x * x / 3 + 2 * std::pow(x, 4) / 5).epsilon(1e-13));
  }
}

TEST_CASE("c_infinity profile on a grid") {
  const int n = 1000;
  for (int i = 1; i < n; ++i) {
    const double lam = static_cast<double>(i) / n;
    const double v = c_infinity(lam);
    CHECK(v >= 2.0);
    CHECK(v >= 2 + (8.0 / 3.0) * (lam - 0.5) * (lam - 0.5));
    CHECK(v == doctest::Approx(c_infinity(1 - lam)).epsilon(1e-14));
  }
  // exact symmetry on dyadic points, where 1 - lam is representable
  for (int i = 1; i < 1024; ++i) CHECK(c_infinity(i / 1024.0) == c_infinity(1 - i / 1024.0));
  for (int i = 1; i < n; i += 7)
    for (int j = i + 2; j < n; j += 11) {
      const double a = static_cast<double>(i) / n, b = static_cast<double>(j) / n;
      CHECK(c_infinity((a + b) / 2) <= (c_infinity(a) + c_infinity(b)) / 2 + 1e-13);
    }
}

TEST_CASE("solve_lambda") {
  CHECK(solve_lambda(2.0) == 0.5);
  CHECK(solve_lambda(kPi) == doctest::Approx(kLambda3).epsilon(1e-8));
  CHECK(std::abs(solve_lambda(kPi) - kLambda3) < 1e-8);
  CHECK(solve_lambda(c_infinity(0.3)) == doctest::Approx(0.3).epsilon(1e-10));
  for (int i = 1; i <= 500; ++i) {
    const double lam = 0.5 * i / 500;
    CHECK(std::abs(solve_lambda(c_infinity(lam)) - lam) < 1e-10);
  }
  CHECK_THROWS_AS(solve_lambda(1.5), DomainError);
}

TEST_CASE("c_upper_bound") {
  CHECK(c_upper_bound(3) == kPi);
  CHECK(c_upper_bound(8) == kPi);
  CHECK(c_upper_bound(9) == 3.0);
  CHECK(c_upper_bound(25) == 2.5);
  CHECK(c_upper_bound(10000) == doctest::Approx(2 + 2.0 / 99));
  for (int d = 3; d <= 500; ++d) {
    CHECK(c_upper_bound(d) > 2.0);
    CHECK(c_upper_bound(d) <= kPi);
  }
  CHECK_THROWS_AS(c_upper_bound(2), DomainError);
}

TEST_CASE("lambda_lower_bound") {
  CHECK(lambda_lower_bound(3) == doctest::Approx(kLambda3).epsilon(1e-8));
  CHECK(lambda_lower_bound(10000) >= 0.5 * (1 - std::sqrt(3.0 / 99)));
  double prev = 0;
  for (int d = 3; d <= 200; ++d) {
    const double v = lambda_lower_bound(d);
    CHECK(v > 1.0 / 17);
    CHECK(v <= 0.5);
    CHECK(v >= prev);
    CHECK(v >= solve_lambda(kPi));
    CHECK(v >= solve_lambda(c_upper_bound(d)) - 1e-15);
    prev = v;
  }
  CHECK_THROWS_AS(lambda_lower_bound(2), DomainError);
}

TEST_CASE("Rogers estimates") {
  CHECK(rogers_theta(3, ThetaVariant::R4) == doctest::Approx(3 * std::log(3.0) + 3 * std::log(std::log(3.0)) + 15));
  CHECK(rogers_theta(3, ThetaVariant::R4) == doctest::Approx(18.578).epsilon(1e-4));
  for (int n : {3, 4, 10, 57, 1000}) {
    CHECK(rogers_theta(n, ThetaVariant::R4) - rogers_theta(n, ThetaVariant::R3) == doctest::Approx(3 * n - 1));
    CHECK(rogers_theta(n, ThetaVariant::R2) == doctest::Approx(r2(n)).epsilon(1e-13));
    CHECK(rogers_theta(n, ThetaVariant::R3) == doctest::Approx(r3(n)).epsilon(1e-13));
    CHECK(rogers_theta(n, ThetaVariant::R4) == doctest::Approx(r4(n)).epsilon(1e-13));
    CHECK(rogers_theta(n, ThetaVariant::R1) == doctest::Approx(theta_r1_oracle(n)).epsilon(1e-9));
    const double w = lambert_w_minus1(-1.0 / n);
    CHECK(rogers_theta(n, ThetaVariant::R1) ==
          doctest::Approx(-n * w * std::pow(1 - 1 / (n * w), n + 1)).epsilon(1e-12));
  }
  for (int n = 3; n <= 300; ++n) {
    const double a = rogers_theta(n, ThetaVariant::R1);
    CHECK(a <= rogers_theta(n, ThetaVariant::R2));
    CHECK(rogers_theta(n, ThetaVariant::R2) < rogers_theta(n, ThetaVariant::R3));
    CHECK(rogers_theta(n, ThetaVariant::R3) < rogers_theta(n, ThetaVariant::R4));
    CHECK(rogers_theta_r1_direct(n) == doctest::Approx(a).epsilon(1e-8));
  }
  CHECK_THROWS_AS(rogers_theta(2, ThetaVariant::R1), DomainError);
  CHECK(parse_theta_variant("r3") == ThetaVariant::R3);
  CHECK(to_string(ThetaVariant::R2) == "r2");
  CHECK_THROWS_AS(parse_theta_variant("r5"), ParseError);
}

TEST_CASE("covering_count") {
  CHECK(covering_count(4, 0.5) == doctest::Approx(81 * rogers_theta(4, ThetaVariant::R1)).epsilon(1e-14));
  for (int n : {3, 8}) {
    double prev = INFINITY;
    for (int i = 1; i < 100; ++i) {
      const double c = covering_count(n, i / 100.0);
      CHECK(c < prev);
      prev = c;
    }
  }
  CHECK_THROWS_AS(covering_count(4, 0.0), DomainError);
  CHECK_THROWS_AS(covering_count(4, 1.0), DomainError);
}

TEST_CASE("gain_bound") {
  for (int n : {3, 4, 9, 30}) {
    const double theta = rogers_theta(n, ThetaVariant::R1);
    const double coef = std::pow(2.0, 1 - n) / n * ((1 - 2.0 / n) / std::exp(1.0)) / theta;
    CHECK(gain_coefficient(n) == doctest::Approx(coef).epsilon(1e-12));
    CHECK(gain_bound(n, 0.0, 1.7) == doctest::Approx(1.7 * 1.7 / 2));
    CHECK(gain_bound(n, 1.0, 1.7) == doctest::Approx(1.7 * 1.7 / 2));
    for (double lam : {0.1, 0.25, 0.5, 0.8}) {
      const double b = gain_bound(n, lam, 2.0);
      CHECK(b == doctest::Approx(2.0 * (1 - coef * std::min(lam, 1 - lam))).epsilon(1e-14));
      CHECK(b < 2.0);
    }
  }
  // the optimal radius never loses against the simple choice
  for (int n = 3; n <= 100; ++n)
    CHECK(gain_coefficient(n, ThetaVariant::R1, GainRadius::optimal) >= gain_coefficient(n) * (1 - 1e-12));
  CHECK_THROWS_AS(gain_bound(2, 0.5, 1.0), DomainError);
  CHECK_THROWS_AS(gain_bound(4, 1.5, 1.0), DomainError);
  CHECK_THROWS_AS(gain_bound(4, 0.5, -1.0), DomainError);
}

TEST_CASE("delay") {
  CHECK(delay(1e-12) == doctest::Approx(0.0).scale(1));
  CHECK(delay(2.0) == 1.0);
  for (double r : {0.1, 1.0, 3.5}) CHECK(2 + 2 * delay(r) == doctest::Approx(2 / (1 - r / 4)));
  CHECK_THROWS_AS(delay(0.0), DomainError);
  CHECK_THROWS_AS(delay(4.0), DomainError);
}

TEST_CASE("magnus_radius") {
  const MagnusRadius m3 = magnus_radius(3);
  CHECK(m3.radius > 2.0);
  CHECK(m3.radius < 2.001);
  const double direct = 2 / (1 - std::pow(2.0, -5) / 3 * ((1 - 2.0 / 3) / std::exp(1.0)) *
                                     (lambda_lower_bound(3) / rogers_theta(3, ThetaVariant::R1)));
  CHECK(m3.radius == doctest::Approx(direct).epsilon(1e-15));
  CHECK(m3.excess == doctest::Approx(direct - 2).epsilon(1e-9));
  for (int n = 3; n <= 200; ++n) {
    const MagnusRadius m = magnus_radius(n);
    CHECK(m.excess > 0.0);
    CHECK(std::isfinite(m.log10_excess));
    CHECK(m.log10_excess == doctest::Approx(std::log10(m.excess)).epsilon(1e-12));
    if (n >= 9) CHECK(m.radius <= c_upper_bound(n));
  }
  CHECK_THROWS_AS(magnus_radius(2), DomainError);
}

TEST_CASE("dimension_profile") {
  CHECK(dimension_profile(3).lambda_lower == doctest::Approx(kLambda3).epsilon(1e-8));
  CHECK(dimension_profile(25).c_upper == 2.5);
  for (int d = 3; d <= 200; ++d) {
    const DimensionProfile p = dimension_profile(d);
    CHECK(p.d == d);
    CHECK(p.theta_r1 <= p.theta_r2);
    CHECK(p.theta_r2 < p.theta_r3);
    CHECK(p.theta_r3 < p.theta_r4);
    CHECK(p.radius_excess > 0);
    CHECK(p.radius <= p.c_upper);
    CHECK(p.lambda_lower > 0);
    CHECK(p.lambda_lower <= 0.5);
  }
  CHECK_THROWS_AS(dimension_profile(2), DomainError);
}
