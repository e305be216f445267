#pragma once

#include <string_view>

#include "magnus_lab/error.hpp"

namespace magnus_lab {

/// Which upper bound of the Rogers covering-density chain to use for theta_n.
enum class ThetaVariant { R1, R2, R3, R4 };

std::string_view to_string(ThetaVariant v);
/// Accepts "r1".."r4" (case-insensitive).
ThetaVariant parse_theta_variant(std::string_view text);

/// Covering radius r of the second-term gain estimate.
///   simple  - r = 1 - 2/n with the (1 - 2/n)/e simplification
///   optimal - r = (sqrt(n^2 + 6n + 1) - n - 1) / 2, no simplification
enum class GainRadius { simple, optimal };

std::string_view to_string(GainRadius g);
GainRadius parse_gain_radius(std::string_view text);

/// Radius of convergence of the lambda-weighted generating function:
/// log((1 - lam)/lam) / (1 - 2 lam), 2 at lam = 1/2, +inf at lam in {0, 1}.
/// DomainError outside [0, 1].
double c_infinity(double lam);

/// The lam in (0, 1/2] with c_infinity(lam) = v, for v >= 2.
double solve_lambda(double v);

/// Counterexample-side upper bound on the critical cumulative norm in real
/// dimension d >= 3: pi for d <= 8, else min(pi, 2 + 2/(floor(sqrt d) - 1)).
double c_upper_bound(int d);

/// Certified lower bound for the lambda-level of dimension d >= 3.
double lambda_lower_bound(int d);

/// theta_n, n >= 3. R1 is computed both from the Lambert W_{-1} closed form
/// and by direct minimization over eta; an Error is thrown if the two differ
/// by more than 1e-8 relative.
double rogers_theta(int n, ThetaVariant variant);

/// min over 0 < eta < 1/n of (1 + eta)^n (1 + n log(1/eta)), by golden-section
/// search in log(eta).
double rogers_theta_r1_direct(int n);

/// (1 + 1/r)^n theta_n(R1): how many copies of rH cover H.
double covering_count(int n, double r);

/// Natural log of the gain coefficient c_n in
///   |mu_2| <= (omega^2 / 2) (1 - c_n min(lam, 1 - lam)).
double log_gain_coefficient(int n, ThetaVariant variant = ThetaVariant::R1,
                            GainRadius radius = GainRadius::simple);

double gain_coefficient(int n, ThetaVariant variant = ThetaVariant::R1,
                        GainRadius radius = GainRadius::simple);

/// Upper bound on the weighted second Magnus term of a measure with
/// cumulative norm omega in a real algebra of dimension n >= 3.
double gain_bound(int n, double lam, double omega, ThetaVariant variant = ThetaVariant::R1,
                  GainRadius radius = GainRadius::simple);

/// r / (4 - r) for 0 < r < 4.
double delay(double r);

/// Convergence radius 2 / (1 - r/4) in cumulative norm, with
/// r = c_n Lambda / 2. The radius exceeds 2 by an amount that falls below
/// double resolution for moderate n, so the excess is reported separately.
struct MagnusRadius {
  double radius = 2.0;              ///< 2 + excess, rounded
  double excess = 0.0;              ///< radius - 2 (underflows only past n ~ 1000)
  double log10_excess = 0.0;        ///< always finite
  double gain_r = 0.0;              ///< r
};

MagnusRadius magnus_radius(int n, ThetaVariant variant = ThetaVariant::R1,
                           GainRadius radius = GainRadius::simple);

/// Per-dimension bundle of every bound above.
struct DimensionProfile {
  int d = 3;
  double theta_r1 = 0, theta_r2 = 0, theta_r3 = 0, theta_r4 = 0;
  double c_upper = 0;
  double lambda_lower = 0;
  double radius = 0;
  double radius_excess = 0;
  double log10_radius_excess = 0;
  double delay_r = 0;
  ThetaVariant theta_variant = ThetaVariant::R1;
  GainRadius gain_radius = GainRadius::simple;
};

DimensionProfile dimension_profile(int d, ThetaVariant variant = ThetaVariant::R1,
                                   GainRadius radius = GainRadius::simple);

}  // namespace magnus_lab
