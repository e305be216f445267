#include "commands.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include "magnus_lab/sampling.hpp"
#include "magnus_lab/special_functions.hpp"
#include "magnus_lab/version.hpp"

namespace magnus_lab::cli {

namespace {

json envelope(const std::string& command, json inputs, json outputs) {
  return {{"command", command},
          {"inputs", std::move(inputs)},
          {"outputs", std::move(outputs)},
          {"versions", {{"magnus_lab", kVersion}}}};
}

json norm_json(const NormValue& v, int digits) {
  json j = {{"decimal", format_decimal(v.value, digits)}};
  if (v.exact) j["exact"] = rational_to_string(*v.exact);
  return j;
}

std::vector<mpq_class> parse_lambdas(const std::vector<std::string>& texts) {
  std::vector<mpq_class> out;
  for (const auto& t : texts) {
    mpq_class lam;
    try {
      lam = parse_rational(t);
    } catch (const ParseError& e) {
      throw UsageError(std::string("--lambda: ") + e.what());
    }
    if (lam < 0 || lam > 1) throw UsageError("--lambda: " + t + " is outside [0, 1]");
    out.push_back(lam);
  }
  if (out.empty()) throw UsageError("--lambda: empty list");
  return out;
}

NormKind parse_norm_flag(const std::string& text) {
  try {
    return parse_norm_kind(text);
  } catch (const ParseError& e) {
    throw UsageError(std::string("--norm: ") + e.what());
  }
}

// Coefficient of t^k in the (1,2) entry of the closed-form logarithm, where
// it is known as a series: alpha = 0 and alpha = +-pi.
std::optional<double> series_reference(const MinimalPair& p, std::size_t k) {
  const double e = p.eps_value();
  const double pi = std::numbers::pi;
  if (p.alpha_over_pi() == 0) {
    if (k % 2 == 1) return 0.0;
    const unsigned j = static_cast<unsigned>(k / 2);
    const double z = static_cast<double>(zeta_even(j));
    return -4.0 * (j % 2 == 0 ? 1.0 : -1.0) * (1.0 - std::ldexp(1.0, -2 * static_cast<int>(j))) * z * e;
  }
  if (p.totally_unbalanced()) {
    const double s = sgn(p.alpha_over_pi()) > 0 ? 1.0 : -1.0;
    if (k == 1) return -s * pi * e;
    if (k == 2) return pi * pi * e;
    if (k % 2 == 0) return 0.0;
    const unsigned j = static_cast<unsigned>((k - 1) / 2);
    return s * (j % 2 == 0 ? 1.0 : -1.0) * 2.0 * pi * static_cast<double>(zeta_even(j)) * e;
  }
  return std::nullopt;
}

}  // namespace

MinimalPair parse_minimal_pair(const std::string& alpha_text, const std::string& eps_text) {
  std::string a;
  for (char c : alpha_text)
    if (!std::isspace(static_cast<unsigned char>(c))) a += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));

  mpq_class eps;
  try {
    eps = parse_rational(eps_text);
  } catch (const ParseError& e) {
    throw UsageError(std::string("--eps: ") + e.what());
  }
  if (eps == 0) throw UsageError("--eps: eps must be nonzero");

  try {
    const auto at = a.find("pi");
    if (at == std::string::npos) {
      double radians = 0.0;
      try {
        radians = to_double(parse_rational(a));
      } catch (const ParseError& e) {
        throw UsageError(std::string("--alpha: ") + e.what());
      }
      return MinimalPair(mpq_class(radians / std::numbers::pi), eps);
    }
    std::string coef = a.substr(0, at);
    std::string rest = a.substr(at + 2);
    if (!coef.empty() && coef.back() == '*') coef.pop_back();
    mpq_class c = 1;
    if (coef == "-") c = -1;
    else if (!coef.empty() && coef != "+") c = parse_rational(coef);
    if (!rest.empty()) {
      if (rest.front() != '/') throw UsageError("--alpha: cannot parse '" + alpha_text + "'");
      const mpq_class divisor = parse_rational(rest.substr(1));
      if (divisor == 0) throw UsageError("--alpha: division by zero");
      c /= divisor;
    }
    return MinimalPair(c, eps);
  } catch (const ParseError& e) {
    throw UsageError(std::string("--alpha: ") + e.what());
  } catch (const DomainError& e) {
    throw UsageError(std::string("--alpha: ") + e.what());
  }
}

CommandResult gen_minimal(const GenMinimalOptions& o) {
  const int digits = output_precision();
  if (o.order < 1) throw UsageError("--order must be >= 1");
  const NormKind kind = parse_norm_flag(o.norm);
  const MinimalPair p = parse_minimal_pair(o.alpha, o.eps);

  const auto [m1, m2] = minimal_pair_matrices(p);
  const auto [u1, u2] = minimal_pair_unit_matrices(p);
  const PairNorms norms = minimal_pair_norms(p, kind);
  const MinimalMagnusTerms terms = minimal_magnus_terms(p, o.order);

  json rows = json::array();
  std::ostringstream csv;
  csv << "k,entry_12,asymptote_12,difference,series_reference,norm\n";
  for (std::size_t k = 1; k <= o.order; ++k) {
    const FloatMatrix& mu = terms.terms[k - 1];
    json row = {{"k", k},
                {"mu_over_pi_power", matrix_to_json(terms.unit_terms.mu(k))},
                {"mu", matrix_to_json(mu, digits)},
                {"norm", format_decimal(op_norm(mu, kind), digits)},
                {"entry_12", format_decimal(mu(0, 1), digits)}};
    std::string asym_text, diff_text, ref_text;
    if (k >= 2) {
      const double asym = minimal_term_asymptote(p, k)(0, 1);
      asym_text = format_decimal(asym, digits);
      diff_text = format_decimal(mu(0, 1) - asym, digits);
      row["asymptote_12"] = asym_text;
      row["difference"] = diff_text;
    }
    if (const auto ref = series_reference(p, k)) {
      ref_text = format_decimal(*ref, digits);
      row["series_reference"] = ref_text;
    }
    csv << k << ',' << format_decimal(mu(0, 1), digits) << ',' << asym_text << ',' << diff_text << ','
        << ref_text << ',' << format_decimal(op_norm(mu, kind), digits) << '\n';
    rows.push_back(std::move(row));
  }

  const double c_even = std::abs(minimal_term_asymptote(p, 2)(0, 1));
  const double c_odd = std::abs(minimal_term_asymptote(p, 3)(0, 1));

  json inputs = {{"alpha", o.alpha}, {"eps", o.eps}, {"order", o.order}, {"norm", std::string(to_string(kind))}};
  json outputs = {
      {"alpha_over_pi", rational_to_string(p.alpha_over_pi())},
      {"alpha", format_decimal(p.alpha(), digits)},
      {"eps", rational_to_string(p.eps())},
      {"M1", matrix_to_json(m1, digits)},
      {"M2", matrix_to_json(m2, digits)},
      {"M1_over_pi", matrix_to_json(u1)},
      {"M2_over_pi", matrix_to_json(u2)},
      {"norms",
       {{"M1", format_decimal(norms.first, digits)},
        {"M2", format_decimal(norms.second, digits)},
        {"ratio", format_decimal(norms.first / norms.second, digits)},
        {"cumulative", format_decimal(norms.cumulative(), digits)},
        {"cumulative_closed_form", format_decimal(minimal_cumulative_norm_closed_form(p, kind), digits)}}},
      {"limits", {{"c_even_times_eps", format_decimal(c_even, digits)},
                  {"c_odd_times_eps", format_decimal(c_odd, digits)}}},
      {"terms", std::move(rows)}};
  return {envelope("gen-minimal", std::move(inputs), std::move(outputs)), csv.str(), kExitOk};
}

CommandResult certify(const CertifyOptions& o) {
  if (o.n < 2) throw UsageError("--n must be >= 2");
  const auto n = static_cast<std::size_t>(o.n);
  const StepMeasure psi = psi_measure(n);
  const RationalMatrix p = rexp_exact(psi);
  const NormValue cumulative = cumulative_norm(psi, NormKind::L1_OP);
  const DivergenceCertificate c = certify_matrix(p);
  const mpq_class expected = mpq_class(2 * o.n) / (o.n - 1);

  const int digits = output_precision();
  json outputs = {{"rexp", matrix_to_json(p)},
                  {"cumulative_norm_l1", norm_json(cumulative, digits)},
                  {"cumulative_norm_expected", rational_to_string(expected)},
                  {"certificate", certificate_to_json(c)}};
  std::ostringstream csv;
  csv << "n,eigencheck,gm_minus_one,parity_verdict,invariance_check,rank_P_plus_I,cumulative_norm_l1\n"
      << c.n << ',' << c.eigencheck << ',' << c.gm_minus_one << ',' << c.parity_verdict << ','
      << c.invariance_check << ',' << c.rank_p_plus_id << ',' << rational_to_string(*cumulative.exact) << '\n';
  const bool verdict = c.eigencheck && c.parity_verdict;
  return {envelope("certify", {{"n", o.n}}, std::move(outputs)), csv.str(),
          verdict ? kExitOk : kExitVerdictFalse};
}

CommandResult bounds(const BoundsOptions& o) {
  if (o.d_min < 3) throw UsageError("--d-min must be >= 3");
  if (o.d_max < o.d_min) throw UsageError("--d-max must be >= --d-min");
  ThetaVariant variant;
  GainRadius gain;
  try {
    variant = parse_theta_variant(o.theta);
    gain = parse_gain_radius(o.gain_r);
  } catch (const ParseError& e) {
    throw UsageError(e.what());
  }
  const int digits = output_precision();
  json rows = json::array();
  std::ostringstream csv;
  csv << "d,theta_r1,theta_r2,theta_r3,theta_r4,c_upper,lambda_lower,radius,radius_excess,"
         "log10_radius_excess,delay_r\n";
  for (long d = o.d_min; d <= o.d_max; ++d) {
    const DimensionProfile p = dimension_profile(static_cast<int>(d), variant, gain);
    csv << d << ',' << format_decimal(p.theta_r1, digits) << ',' << format_decimal(p.theta_r2, digits) << ','
        << format_decimal(p.theta_r3, digits) << ',' << format_decimal(p.theta_r4, digits) << ','
        << format_decimal(p.c_upper, digits) << ',' << format_decimal(p.lambda_lower, digits) << ','
        << format_decimal(p.radius, digits) << ',' << format_decimal(p.radius_excess, digits) << ','
        << format_decimal(p.log10_radius_excess, digits) << ',' << format_decimal(p.delay_r, digits) << '\n';
    rows.push_back(profile_to_json(p, digits));
  }
  json inputs = {{"d_min", o.d_min}, {"d_max", o.d_max},
                 {"theta", std::string(to_string(variant))}, {"gain_r", std::string(to_string(gain))}};
  return {envelope("bounds", std::move(inputs), {{"profiles", std::move(rows)}}), csv.str(), kExitOk};
}

CommandResult magnus(const MagnusOptions& o) {
  if (o.order < 1) throw UsageError("--order must be >= 1");
  const NormKind kind = parse_norm_flag(o.norm);
  const std::vector<mpq_class> lambdas = parse_lambdas(o.lambdas);

  std::ifstream in(o.measure_file);
  if (!in) throw ParseError("cannot read measure file '" + o.measure_file + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  const StepMeasure phi = parse_step_measure(buffer.str());

  const int digits = output_precision();
  const MagnusTermSequence terms = magnus_terms(phi, o.order);

  json term_rows = json::array();
  std::ostringstream csv;
  csv << "k,norm\n";
  for (std::size_t k = 1; k <= terms.order(); ++k) {
    const NormValue nv = op_norm(terms.mu(k), kind);
    term_rows.push_back({{"k", k}, {"mu", matrix_to_json(terms.mu(k))}, {"norm", norm_json(nv, digits)}});
    csv << k << ',' << format_decimal(nv.value, digits) << '\n';
  }

  json rexp;
  try {
    rexp = {{"exact", true}, {"matrix", matrix_to_json(rexp_exact(phi))}};
  } catch (const NotNilpotent&) {
    rexp = {{"exact", false},
            {"matrix", matrix_to_json(rexp_float(phi), digits)},
            {"warning", "a step is not nilpotent; time-ordered exponential computed in floating point"}};
  }

  json weighted = json::array();
  for (const auto& lam : lambdas) {
    const RationalMatrix w = weighted_second_term(phi, lam);
    weighted.push_back({{"lambda", rational_to_string(lam)},
                        {"matrix", matrix_to_json(w)},
                        {"norm", norm_json(op_norm(w, kind), digits)}});
  }

  json lambda_inputs = json::array();
  for (const auto& lam : lambdas) lambda_inputs.push_back(rational_to_string(lam));
  json inputs = {{"measure_file", o.measure_file}, {"order", o.order},
                 {"norm", std::string(to_string(kind))}, {"lambda", std::move(lambda_inputs)}};
  json outputs = {{"n", phi.matrix_size()},
                  {"steps", phi.steps().size()},
                  {"cumulative_norm", norm_json(cumulative_norm(phi, kind), digits)},
                  {"terms", std::move(term_rows)},
                  {"rexp", std::move(rexp)},
                  {"weighted_second_term", std::move(weighted)}};
  return {envelope("magnus", std::move(inputs), std::move(outputs)), csv.str(), kExitOk};
}

CommandResult gain_test(const GainTestOptions& o) {
  if (o.trials < 1) throw UsageError("--trials must be >= 1");
  if (o.max_steps < 1) throw UsageError("--max-steps must be >= 1");
  const std::vector<mpq_class> lambdas = parse_lambdas(o.lambdas);
  constexpr int kAlgebraDimension = 4;  // real 2x2 matrices

  struct Tally {
    std::size_t violations = 0;
    double max_ratio = 0.0;
  };
  std::vector<Tally> tallies(lambdas.size());

  MeasureSampler sampler(o.seed);
  for (std::size_t t = 0; t < o.trials; ++t) {
    const auto steps = static_cast<std::size_t>(sampler.uniform_int(1, static_cast<long>(o.max_steps)));
    const StepMeasure phi = sampler.unit_density_measure(2, steps, NormKind::L1_OP);
    const double omega = to_double(phi.total_duration());
    for (std::size_t i = 0; i < lambdas.size(); ++i) {
      const NormValue lhs = op_norm(weighted_second_term(phi, lambdas[i]), NormKind::L1_OP);
      const double bound = gain_bound(kAlgebraDimension, to_double(lambdas[i]), omega);
      if (lhs.value > bound) ++tallies[i].violations;
      tallies[i].max_ratio = std::max(tallies[i].max_ratio, lhs.value / bound);
    }
  }

  const int digits = output_precision();
  json rows = json::array();
  std::ostringstream csv;
  csv << "lambda,trials,violations,max_ratio\n";
  bool clean = true;
  json lambda_inputs = json::array();
  for (std::size_t i = 0; i < lambdas.size(); ++i) {
    clean = clean && tallies[i].violations == 0;
    const std::string lam = rational_to_string(lambdas[i]);
    lambda_inputs.push_back(lam);
    rows.push_back({{"lambda", lam},
                    {"trials", o.trials},
                    {"violations", tallies[i].violations},
                    {"max_ratio", format_decimal(tallies[i].max_ratio, digits)},
                    {"gain_coefficient", format_decimal(gain_coefficient(kAlgebraDimension), digits)}});
    csv << lam << ',' << o.trials << ',' << tallies[i].violations << ','
        << format_decimal(tallies[i].max_ratio, digits) << '\n';
  }
  json inputs = {{"trials", o.trials}, {"seed", o.seed}, {"lambda", std::move(lambda_inputs)},
                 {"max_steps", o.max_steps}, {"algebra_dimension", kAlgebraDimension}, {"norm", "l1"}};
  return {envelope("gain-test", std::move(inputs), {{"results", std::move(rows)}}), csv.str(),
          clean ? kExitOk : kExitVerdictFalse};
}

}  // namespace magnus_lab::cli
