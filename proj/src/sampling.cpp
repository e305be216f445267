#include "magnus_lab/sampling.hpp"

namespace magnus_lab {

long MeasureSampler::uniform_int(long lo, long hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  // Rejection keeps the draw unbiased.
  const std::uint64_t limit = std::mt19937_64::max() - std::mt19937_64::max() % span;
  std::uint64_t x;
  do x = engine_();
  while (x >= limit);
  return lo + static_cast<long>(x % span);
}

mpq_class MeasureSampler::rational(long max_num, long max_den) {
  mpq_class q(uniform_int(-max_num, max_num), static_cast<unsigned long>(uniform_int(1, max_den)));
  q.canonicalize();
  return q;
}

RationalMatrix MeasureSampler::matrix(std::size_t n, long max_num, long max_den) {
  RationalMatrix m(n);
  do {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = rational(max_num, max_den);
  } while (m.is_zero());
  return m;
}

StepMeasure MeasureSampler::unit_density_measure(std::size_t n, std::size_t steps, NormKind kind) {
  std::vector<Step> out;
  out.reserve(steps);
  for (std::size_t k = 0; k < steps; ++k) {
    RationalMatrix a = matrix(n, 9, 4);
    const mpq_class norm = *op_norm(a, kind).exact;
    a *= mpq_class(1 / norm);
    mpq_class duration(uniform_int(1, 16), 8);
    duration.canonicalize();
    out.push_back(Step{std::move(a), duration});
  }
  return StepMeasure(std::move(out));
}

StepMeasure MeasureSampler::upper_triangular_measure(std::size_t steps) {
  std::vector<Step> out;
  out.reserve(steps);
  for (std::size_t k = 0; k < steps; ++k) {
    RationalMatrix a(2);
    do {
      a(0, 0) = rational(5, 3);
      a(0, 1) = rational(5, 3);
      a(1, 1) = rational(5, 3);
    } while (a.is_zero());
    mpq_class duration(uniform_int(1, 8), 4);
    duration.canonicalize();
    out.push_back(Step{std::move(a), duration});
  }
  return StepMeasure(std::move(out));
}

}  // namespace magnus_lab
