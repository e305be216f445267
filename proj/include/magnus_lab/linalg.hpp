#pragma once

#include <cstddef>
#include <optional>
#include <string_view>

#include "magnus_lab/matrix.hpp"

namespace magnus_lab {

/// Operator norms induced by the vector l^p norms.
enum class NormKind {
  L1_OP,    ///< max absolute column sum
  LINF_OP,  ///< max absolute row sum
  L2_OP,    ///< spectral norm
};

std::string_view to_string(NormKind kind);

/// Accepts "l1", "linf", "l2" (case-insensitive).
NormKind parse_norm_kind(std::string_view text);

/// A norm value: always a double, plus the exact rational when the norm of a
/// rational input is itself rational (L1_OP and LINF_OP).
struct NormValue {
  double value = 0.0;
  std::optional<mpq_class> exact;
};

NormValue op_norm(const RationalMatrix& m, NormKind kind);
double op_norm(const FloatMatrix& m, NormKind kind);

/// Exact rank over Q, by fraction-free (Bareiss) elimination.
std::size_t rank_exact(const RationalMatrix& m);

/// Dimension of the eigenspace of `lam`, i.e. n - rank(M - lam Id).
std::size_t geometric_multiplicity(const RationalMatrix& m, const mpq_class& lam);

/// Finite exponential sum of a nilpotent matrix. Throws NotNilpotent when
/// M^n != 0.
RationalMatrix exp_nilpotent(const RationalMatrix& m);

/// True when M^n = 0, checked by repeated squaring.
bool is_nilpotent(const RationalMatrix& m);

/// Matrix exponential by scaling and squaring around a Taylor core.
FloatMatrix exp_float(const FloatMatrix& m);

/// Principal logarithm via the resolvent integral
///   log A = \int_0^1 (A - Id) (lam Id + (1 - lam) A)^{-1} dlam
/// evaluated with `nodes`-point Gauss-Legendre quadrature.
///
/// Throws SingularPencil when some resolvent has a 1-norm condition estimate
/// above `condition_limit`, or when exp of the result misses A by more than
/// 1e-6 relative (a pencil singular between nodes, or too few nodes).
FloatMatrix log_integral(const FloatMatrix& a, int nodes = 64,
                         double condition_limit = 1e12);

/// Inverse by LU with partial pivoting; throws SingularPencil if a pivot
/// vanishes.
FloatMatrix inverse(const FloatMatrix& m);

}  // namespace magnus_lab
