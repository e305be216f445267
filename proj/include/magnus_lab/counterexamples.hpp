#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "magnus_lab/linalg.hpp"
#include "magnus_lab/measures.hpp"

namespace magnus_lab {

// ---------------------------------------------------------------------------
// 2x2 upper-triangular pair
//
//   M1 = [ (pi - a)/2   -(pi + a) eps/2 ]     M2 = [ (pi + a)/2   (pi - a) eps/2 ]
//        [     0          -(pi - a)/2   ]          [     0          -(pi + a)/2  ]
//
// with -pi <= a <= pi and eps != 0. Both matrices are pi times a rational
// matrix whenever a / pi and eps are rational, which is how the pair is
// stored: the Magnus terms are then pi^k times exact rationals.
// ---------------------------------------------------------------------------

class MinimalPair {
 public:
  /// alpha = alpha_over_pi * pi. Throws DomainError unless
  /// -1 <= alpha_over_pi <= 1 and eps != 0.
  MinimalPair(mpq_class alpha_over_pi, mpq_class eps);

  /// From an angle in radians; alpha / pi and eps are taken as the exact
  /// rationals of their double values.
  static MinimalPair from_radians(double alpha, double eps);

  const mpq_class& alpha_over_pi() const noexcept { return alpha_over_pi_; }
  const mpq_class& eps() const noexcept { return eps_; }
  double alpha() const;
  double eps_value() const;

  /// alpha = +pi or alpha = -pi.
  bool totally_unbalanced() const;

 private:
  mpq_class alpha_over_pi_;
  mpq_class eps_;
};

/// (M1, M2) in floating point.
std::pair<FloatMatrix, FloatMatrix> minimal_pair_matrices(const MinimalPair& p);

/// (M1 / pi, M2 / pi), exact.
std::pair<RationalMatrix, RationalMatrix> minimal_pair_unit_matrices(const MinimalPair& p);

/// The measure (M1 / pi) 1_[0,1) . (M2 / pi) 1_[1,2).
StepMeasure minimal_pair_unit_measure(const MinimalPair& p);

struct MinimalMagnusTerms {
  MagnusTermSequence unit_terms;  ///< mu_k / pi^k, exact
  std::vector<FloatMatrix> terms; ///< mu_k
};

/// Magnus terms of M1 1_[0,1) . M2 1_[1,2), computed exactly up to the
/// factor pi^k.
MinimalMagnusTerms minimal_magnus_terms(const MinimalPair& p, std::size_t order);

struct PairNorms {
  double first = 0.0;   ///< ||M1||
  double second = 0.0;  ///< ||M2||
  double cumulative() const { return first + second; }
};

/// ||M1|| and ||M2|| computed directly.
PairNorms minimal_pair_norms(const MinimalPair& p, NormKind kind);

/// The closed-form cumulative norm: pi + pi |eps| for l1 and linf, and
///   pi |eps| / 2 + sqrt(((pi - a)/2)^2 + ((pi + a)/2)^2 eps^2 / 4)
///                + sqrt(((pi + a)/2)^2 + ((pi - a)/2)^2 eps^2 / 4)
/// for l2.
double minimal_cumulative_norm_closed_form(const MinimalPair& p, NormKind kind);

/// log Rexp(t M1 1_[0,1) . t M2 1_[1,2)) in closed form. Returns the zero
/// matrix at t = 0 (the value of the power series there). Throws PoleError if
/// the evaluation is not finite.
FloatMatrix minimal_log_closed_form(const MinimalPair& p, double t);

/// Leading oscillatory part of mu_k for k >= 2: a multiple of E_12.
FloatMatrix minimal_term_asymptote(const MinimalPair& p, std::size_t k);

/// An alpha in [-pi, pi] with ||M1|| : ||M2|| = rho, to 1e-9. Throws
/// RatioUnreachable when rho lies outside the range spanned by alpha = +-pi.
double find_alpha_for_ratio(double rho, double eps, NormKind kind);

// ---------------------------------------------------------------------------
// n x n parabolic family
// ---------------------------------------------------------------------------

struct ParabolicFamily {
  std::size_t n = 2;
  mpq_class s;
};

/// Q^(n)_u: row u holds sgn(j - u), every other row is zero (1-based u).
RationalMatrix q_matrix(std::size_t n, std::size_t u);

/// psi_n: n unit-length steps with densities (2/(n-1)) Q^(n)_k, k = 1..n.
StepMeasure psi_measure(std::size_t n);

/// (Id + s Q_1)...(Id + s Q_k) assembled from the closed-form blocks
///   [[A + B, C], [0, Id_{n-k}]].
RationalMatrix partial_product_closed_form(std::size_t n, std::size_t k, const mpq_class& s);

/// P^(n)(s) = (Id + s Q_1)...(Id + s Q_n).
RationalMatrix product_matrix(const ParabolicFamily& f);

/// Exact evidence that Rexp(psi_n) has no real logarithm.
struct DivergenceCertificate {
  std::size_t n = 0;
  bool eigencheck = false;        ///< P v = -v for the all-ones v
  std::size_t gm_minus_one = 0;   ///< geometric multiplicity of -1
  bool parity_verdict = false;    ///< gm_minus_one is odd
  bool invariance_check = false;  ///< P^T S P = S for S = Id - v v^T / n
  std::size_t rank_p_plus_id = 0;
};

/// Builds P = Rexp(psi_n) and checks it. Throws CertificateFailed if the
/// eigenvector check fails.
DivergenceCertificate certify_divergence(std::size_t n);

/// The same checks on an arbitrary matrix (no exception on failure).
DivergenceCertificate certify_matrix(const RationalMatrix& p);

}  // namespace magnus_lab
