#include "magnus_lab/bounds.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "magnus_lab/error.hpp"
#include "magnus_lab/special_functions.hpp"

namespace magnus_lab {

namespace {

std::string lower(std::string_view text) {
  std::string t(text);
  std::transform(t.begin(), t.end(), t.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return t;
}

void require_dimension(int n, const char* what) {
  if (n < 3) throw DomainError(std::string(what) + ": dimension must be >= 3, got " + std::to_string(n));
}

int isqrt(int d) {
  int r = static_cast<int>(std::sqrt(static_cast<double>(d)));
  while (r * r > d) --r;
  while ((r + 1) * (r + 1) <= d) ++r;
  return r;
}

}  // namespace

std::string_view to_string(ThetaVariant v) {
  switch (v) {
    case ThetaVariant::R1: return "r1";
    case ThetaVariant::R2: return "r2";
    case ThetaVariant::R3: return "r3";
    case ThetaVariant::R4: return "r4";
  }
  return "?";
}

ThetaVariant parse_theta_variant(std::string_view text) {
  const std::string t = lower(text);
  if (t == "r1") return ThetaVariant::R1;
  if (t == "r2") return ThetaVariant::R2;
  if (t == "r3") return ThetaVariant::R3;
  if (t == "r4") return ThetaVariant::R4;
  throw ParseError("unknown theta variant '" + std::string(text) + "' (expected r1..r4)");
}

std::string_view to_string(GainRadius g) { return g == GainRadius::simple ? "simple" : "optimal"; }

GainRadius parse_gain_radius(std::string_view text) {
  const std::string t = lower(text);
  if (t == "simple") return GainRadius::simple;
  if (t == "optimal") return GainRadius::optimal;
  throw ParseError("unknown gain radius '" + std::string(text) + "' (expected simple or optimal)");
}

double c_infinity(double lam) {
  if (!(lam >= 0.0 && lam <= 1.0)) throw DomainError("c_infinity: lambda outside [0, 1]");
  const double m = lam <= 0.5 ? lam : 1.0 - lam;
  if (m == 0.0) return std::numeric_limits<double>::infinity();
  const double x = 1.0 - 2.0 * m;
  if (x < 1e-3) {
    // 2 artanh(x) / x = 2 sum_j x^{2j} / (2j + 1)
    const double x2 = x * x;
    double sum = 0.0, power = 1.0;
    for (int j = 0; j < 8; ++j) {
      sum += power / (2 * j + 1);
      power *= x2;
    }
    return 2.0 * sum;
  }
  return std::log1p(x / m) / x;
}

double solve_lambda(double v) {
  if (!(v >= 2.0) || !std::isfinite(v)) throw DomainError("solve_lambda: value must be finite and >= 2");
  if (v == 2.0) return 0.5;
  double lo = 0.0, hi = 0.5;  // c_infinity(lo) > v >= c_infinity(hi)
  for (int iter = 0; iter < 200 && hi - lo > 1e-16; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (c_infinity(mid) > v) lo = mid;
    else hi = mid;
  }
  return 0.5 * (lo + hi);
}

double c_upper_bound(int d) {
  require_dimension(d, "c_upper_bound");
  if (d == 3) return std::numbers::pi;
  const int root = isqrt(d);
  return std::min(std::numbers::pi, 2.0 + 2.0 / (root - 1));
}

double lambda_lower_bound(int d) {
  require_dimension(d, "lambda_lower_bound");
  double best = std::max(solve_lambda(c_upper_bound(d)), solve_lambda(std::numbers::pi));
  if (d >= 25) {
    const int root = isqrt(d);
    best = std::max(best, 0.5 * (1.0 - std::sqrt(3.0 / (root - 1))));
  }
  return best;
}

double rogers_theta_r1_direct(int n) {
  require_dimension(n, "rogers_theta");
  const double dn = n;
  auto f = [dn](double u) {  // u = log(eta)
    return std::exp(dn * std::log1p(std::exp(u))) * (1.0 - dn * u);
  };
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = -std::log(dn) - 60.0, b = -std::log(dn);
  double c = b - inv_phi * (b - a), d = a + inv_phi * (b - a);
  double fc = f(c), fd = f(d);
  while (b - a > 1e-12) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  return f(0.5 * (a + b));
}

double rogers_theta(int n, ThetaVariant variant) {
  require_dimension(n, "rogers_theta");
  const double dn = n;
  const double nlogn = dn * std::log(dn);
  switch (variant) {
    case ThetaVariant::R1: {
      const double w = lambert_w_minus1(-1.0 / dn);
      const double closed = -dn * w * std::pow(1.0 - 1.0 / (dn * w), dn + 1.0);
      const double direct = rogers_theta_r1_direct(n);
      if (std::abs(closed - direct) > 1e-8 * closed)
        throw Error("rogers_theta: closed form " + std::to_string(closed) +
                    " disagrees with direct minimum " + std::to_string(direct));
      return closed;
    }
    case ThetaVariant::R2:
      return std::pow(1.0 + 1.0 / nlogn, dn) * (1.0 + dn * std::log(nlogn));
    case ThetaVariant::R3:
      return nlogn + dn * std::log(std::log(dn)) + 2.0 * dn + 1.0;
    case ThetaVariant::R4:
      return nlogn + dn * std::log(std::log(dn)) + 5.0 * dn;
  }
  return 0.0;
}

double covering_count(int n, double r) {
  require_dimension(n, "covering_count");
  if (!(r > 0.0 && r < 1.0)) throw DomainError("covering_count: r must lie in (0, 1)");
  return std::pow(1.0 + 1.0 / r, n) * rogers_theta(n, ThetaVariant::R1);
}

double log_gain_coefficient(int n, ThetaVariant variant, GainRadius radius) {
  require_dimension(n, "gain_coefficient");
  const double dn = n;
  const double log_theta = std::log(rogers_theta(n, variant));
  if (radius == GainRadius::simple)
    return (1.0 - dn) * std::numbers::ln2 - std::log(dn) + std::log1p(-2.0 / dn) - 1.0 - log_theta;
  // (1 - r) / ((1 + 1/r)^n theta) at the maximizing r.
  const double r = 0.5 * (std::sqrt(dn * dn + 6.0 * dn + 1.0) - dn - 1.0);
  return std::log1p(-r) + dn * (std::log(r) - std::log1p(r)) - log_theta;
}

double gain_coefficient(int n, ThetaVariant variant, GainRadius radius) {
  return std::exp(log_gain_coefficient(n, variant, radius));
}

double gain_bound(int n, double lam, double omega, ThetaVariant variant, GainRadius radius) {
  require_dimension(n, "gain_bound");
  if (!(lam >= 0.0 && lam <= 1.0)) throw DomainError("gain_bound: lambda outside [0, 1]");
  if (!(omega >= 0.0)) throw DomainError("gain_bound: omega must be nonnegative");
  const double c = gain_coefficient(n, variant, radius);
  return 0.5 * omega * omega * (1.0 - c * std::min(lam, 1.0 - lam));
}

double delay(double r) {
  if (!(r > 0.0 && r < 4.0)) throw DomainError("delay: r must lie in (0, 4)");
  return r / (4.0 - r);
}

MagnusRadius magnus_radius(int n, ThetaVariant variant, GainRadius radius) {
  require_dimension(n, "magnus_radius");
  const double lambda = lambda_lower_bound(n);
  // r = c_n Lambda / 2; radius = 2 / (1 - r/4) = 2 + 2 r / (4 - r).
  const double log_r = log_gain_coefficient(n, variant, radius) + std::log(lambda) - std::numbers::ln2;
  MagnusRadius out;
  out.gain_r = std::exp(log_r);
  const double log_excess = std::numbers::ln2 + log_r - std::log(4.0 - out.gain_r);
  out.log10_excess = log_excess / std::numbers::ln10;
  out.excess = std::exp(log_excess);
  out.radius = 2.0 + out.excess;
  return out;
}

DimensionProfile dimension_profile(int d, ThetaVariant variant, GainRadius radius) {
  require_dimension(d, "dimension_profile");
  DimensionProfile p;
  p.d = d;
  p.theta_r1 = rogers_theta(d, ThetaVariant::R1);
  p.theta_r2 = rogers_theta(d, ThetaVariant::R2);
  p.theta_r3 = rogers_theta(d, ThetaVariant::R3);
  p.theta_r4 = rogers_theta(d, ThetaVariant::R4);
  p.c_upper = c_upper_bound(d);
  p.lambda_lower = lambda_lower_bound(d);
  const MagnusRadius mr = magnus_radius(d, variant, radius);
  p.radius = mr.radius;
  p.radius_excess = mr.excess;
  p.log10_radius_excess = mr.log10_excess;
  p.delay_r = mr.gain_r;
  p.theta_variant = variant;
  p.gain_radius = radius;
  return p;
}

}  // namespace magnus_lab
