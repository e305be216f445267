#pragma once

#include <cstdint>
#include <random>

#include "magnus_lab/measures.hpp"

namespace magnus_lab {

/// Seeded random step measures. Draws use raw 64-bit engine output only, so
/// a seed reproduces the same measures on every platform.
class MeasureSampler {
 public:
  explicit MeasureSampler(std::uint64_t seed) : engine_(seed) {}

  /// Uniform integer in [lo, hi].
  long uniform_int(long lo, long hi);

  /// p/q with |p| <= max_num and 1 <= q <= max_den.
  mpq_class rational(long max_num, long max_den);

  /// Dense n x n matrix with entries p/q drawn as above, never zero.
  RationalMatrix matrix(std::size_t n, long max_num, long max_den);

  /// `steps` densities rescaled to exact unit norm (kind must be L1_OP or
  /// LINF_OP), durations k/8 for k = 1..16.
  StepMeasure unit_density_measure(std::size_t n, std::size_t steps, NormKind kind);

  /// 2 x 2 upper-triangular densities with small rational entries and
  /// durations k/4 for k = 1..8.
  StepMeasure upper_triangular_measure(std::size_t steps);

 private:
  std::mt19937_64 engine_;
};

}  // namespace magnus_lab
