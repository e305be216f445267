#include "magnus_lab/measures.hpp"

#include <string>

namespace magnus_lab {

StepMeasure::StepMeasure(std::vector<Step> steps) : steps_(std::move(steps)) {
  if (steps_.empty()) throw DomainError("step measure needs at least one step");
  const std::size_t n = steps_.front().density.size();
  if (n == 0) throw DomainError("step measure densities must be at least 1x1");
  for (std::size_t i = 0; i < steps_.size(); ++i) {
    if (steps_[i].density.size() != n)
      throw SizeMismatch("step " + std::to_string(i) + " has size " +
                         std::to_string(steps_[i].density.size()) + ", expected " +
                         std::to_string(n));
    if (steps_[i].duration <= 0)
      throw DomainError("step " + std::to_string(i) + " has non-positive duration");
  }
}

mpq_class StepMeasure::total_duration() const {
  mpq_class total = 0;
  for (const auto& s : steps_) total += s.duration;
  return total;
}

StepMeasure StepMeasure::then(const StepMeasure& later) const {
  std::vector<Step> all = steps_;
  all.insert(all.end(), later.steps_.begin(), later.steps_.end());
  return StepMeasure(std::move(all));
}

StepMeasure StepMeasure::scaled(const mpq_class& c) const {
  std::vector<Step> all = steps_;
  for (auto& s : all) s.density *= c;
  return StepMeasure(std::move(all));
}

NormValue cumulative_norm(const StepMeasure& phi, NormKind kind) {
  if (kind == NormKind::L2_OP) {
    double total = 0.0;
    for (const auto& s : phi.steps()) total += op_norm(s.density, kind).value * to_double(s.duration);
    return {total, std::nullopt};
  }
  mpq_class total = 0;
  for (const auto& s : phi.steps()) total += *op_norm(s.density, kind).exact * s.duration;
  return {to_double(total), total};
}

RationalMatrix rexp_exact(const StepMeasure& phi) {
  RationalMatrix result = RationalMatrix::identity(phi.matrix_size());
  for (const auto& s : phi.steps()) result = result * exp_nilpotent(s.duration * s.density);
  return result;
}

FloatMatrix rexp_float(const StepMeasure& phi) {
  FloatMatrix result = FloatMatrix::identity(phi.matrix_size());
  for (const auto& s : phi.steps()) result = result * exp_float(to_float(s.duration * s.density));
  return result;
}

MagnusTermSequence magnus_terms(const StepMeasure& phi, std::size_t order) {
  if (order == 0) throw DomainError("magnus_terms: order must be >= 1");
  MatrixPowerSeries product = MatrixPowerSeries::identity(phi.matrix_size(), order);
  for (const auto& s : phi.steps())
    product = series_mul(product, series_exp(s.duration * s.density, order));
  const MatrixPowerSeries log = series_log(product);

  MagnusTermSequence out;
  out.terms.reserve(order);
  for (std::size_t k = 1; k <= order; ++k) out.terms.push_back(log[k]);
  return out;
}

RationalMatrix weighted_second_term(const StepMeasure& phi, const mpq_class& lam) {
  const auto& steps = phi.steps();
  const std::size_t n = phi.matrix_size();
  RationalMatrix ascending(n), descending(n);
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const RationalMatrix ai = steps[i].duration * steps[i].density;
    const RationalMatrix diagonal = mpq_class(1, 2) * (ai * ai);
    ascending += diagonal;
    descending += diagonal;
    for (std::size_t j = i + 1; j < steps.size(); ++j) {
      const RationalMatrix aj = steps[j].duration * steps[j].density;
      ascending += ai * aj;
      descending += aj * ai;
    }
  }
  return lam * ascending + (lam - 1) * descending;
}

std::vector<double> term_norms(const MagnusTermSequence& terms, NormKind kind) {
  std::vector<double> out;
  out.reserve(terms.order());
  for (const auto& mu : terms.terms) out.push_back(op_norm(mu, kind).value);
  return out;
}

std::vector<double> divergence_indicator(const StepMeasure& phi, std::size_t order,
                                         NormKind kind) {
  if (order < 2) throw DomainError("divergence_indicator: order must be >= 2");
  return term_norms(magnus_terms(phi, order), kind);
}

}  // namespace magnus_lab
