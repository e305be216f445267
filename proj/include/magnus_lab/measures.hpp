#pragma once

#include <cstddef>
#include <vector>

#include "magnus_lab/linalg.hpp"
#include "magnus_lab/series.hpp"

namespace magnus_lab {

/// One piece A * 1_[tau, tau + duration) of a step measure.
struct Step {
  RationalMatrix density;
  mpq_class duration;
};

/// Piecewise-constant operator measure A_1 1_[t0,t1) . ... . A_k 1_[t_{k-1},t_k).
///
/// Steps are in time order; in products the earliest step stands leftmost.
class StepMeasure {
 public:
  /// Throws DomainError for an empty list or a non-positive duration and
  /// SizeMismatch when densities differ in size.
  explicit StepMeasure(std::vector<Step> steps);

  std::size_t matrix_size() const noexcept { return steps_.front().density.size(); }
  const std::vector<Step>& steps() const noexcept { return steps_; }
  mpq_class total_duration() const;

  /// The measure followed by `later` (concatenation in time).
  StepMeasure then(const StepMeasure& later) const;

  /// Scales every density by c; the measure t * phi.
  StepMeasure scaled(const mpq_class& c) const;

 private:
  std::vector<Step> steps_;
};

/// mu_1, ..., mu_K of the Magnus expansion.
struct MagnusTermSequence {
  std::vector<RationalMatrix> terms;  ///< terms[k - 1] = mu_k

  std::size_t order() const noexcept { return terms.size(); }
  const RationalMatrix& mu(std::size_t k) const { return terms.at(k - 1); }
};

/// sum_i ||A_i|| l_i; exact for the L1_OP and LINF_OP kinds.
NormValue cumulative_norm(const StepMeasure& phi, NormKind kind);

/// Time-ordered exponential prod_i exp(l_i A_i), exact. Every l_i A_i must be
/// nilpotent (NotNilpotent otherwise).
RationalMatrix rexp_exact(const StepMeasure& phi);

/// Time-ordered exponential in floating point, for arbitrary steps.
FloatMatrix rexp_float(const StepMeasure& phi);

/// The Magnus terms mu_1..mu_K: the coefficients of t^k in
/// log(prod_i exp(t l_i A_i)), exactly.
MagnusTermSequence magnus_terms(const StepMeasure& phi, std::size_t order);

/// lam * P + (lam - 1) * Q where P collects the ascending pairs t1 < t2 and Q
/// the descending pairs of the double integral of phi(t1) phi(t2); the
/// diagonal squares split evenly between the two.
RationalMatrix weighted_second_term(const StepMeasure& phi, const mpq_class& lam);

/// k -> ||mu_k|| for k = 1..K (diagnostic only).
std::vector<double> divergence_indicator(const StepMeasure& phi, std::size_t order,
                                         NormKind kind);

/// Same, from precomputed terms.
std::vector<double> term_norms(const MagnusTermSequence& terms, NormKind kind);

}  // namespace magnus_lab
