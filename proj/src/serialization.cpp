#include "magnus_lab/serialization.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <string>

namespace magnus_lab {

std::string format_decimal(double x, int digits) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  if (x == 0.0) x = 0.0;  // drop the sign of -0
  char buf[96];
  std::snprintf(buf, sizeof buf, "%#.*g", digits, x);
  return buf;
}

int output_precision() {
  const char* env = std::getenv("MAGNUS_LAB_PRECISION");
  if (env == nullptr) return 15;
  char* end = nullptr;
  const long v = std::strtol(env, &end, 10);
  if (end == env || *end != '\0' || v < 1 || v > 40) return 15;
  return static_cast<int>(v);
}

json matrix_to_json(const RationalMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.size(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.size(); ++j) row.push_back(rational_to_string(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json matrix_to_json(const FloatMatrix& m, int digits) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.size(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.size(); ++j) row.push_back(format_decimal(m(i, j), digits));
    rows.push_back(std::move(row));
  }
  return rows;
}

mpq_class rational_from_json(const json& j) {
  if (j.is_number_integer()) return parse_rational(j.dump());
  if (j.is_number_float()) return parse_rational(j.dump());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw ParseError("expected a number or rational string, got " + j.dump());
}

json step_measure_to_json(const StepMeasure& phi) {
  json steps = json::array();
  for (const auto& s : phi.steps())
    steps.push_back({{"matrix", matrix_to_json(s.density)}, {"duration", rational_to_string(s.duration)}});
  return {{"n", phi.matrix_size()}, {"steps", std::move(steps)}};
}

StepMeasure step_measure_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("step measure: expected a JSON object");
  if (!j.contains("n") || !j["n"].is_number_integer() || j["n"].get<long long>() < 1)
    throw ParseError("step measure: \"n\" must be a positive integer");
  const auto n = static_cast<std::size_t>(j["n"].get<long long>());
  if (!j.contains("steps") || !j["steps"].is_array() || j["steps"].empty())
    throw ParseError("step measure: \"steps\" must be a nonempty array");

  std::vector<Step> steps;
  for (std::size_t k = 0; k < j["steps"].size(); ++k) {
    const json& s = j["steps"][k];
    const std::string where = "step " + std::to_string(k);
    if (!s.is_object() || !s.contains("matrix") || !s.contains("duration"))
      throw ParseError(where + ": needs \"matrix\" and \"duration\"");
    const json& rows = s["matrix"];
    if (!rows.is_array() || rows.size() != n) throw ParseError(where + ": matrix must have n rows");
    RationalMatrix m(n);
    for (std::size_t r = 0; r < n; ++r) {
      if (!rows[r].is_array() || rows[r].size() != n)
        throw ParseError(where + ": matrix row " + std::to_string(r) + " must have n entries");
      for (std::size_t c = 0; c < n; ++c) m(r, c) = rational_from_json(rows[r][c]);
    }
    const mpq_class duration = rational_from_json(s["duration"]);
    if (duration <= 0) throw ParseError(where + ": duration must be positive");
    steps.push_back(Step{std::move(m), duration});
  }
  return StepMeasure(std::move(steps));
}

StepMeasure parse_step_measure(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("step measure: malformed JSON: ") + e.what());
  }
  try {
    return step_measure_from_json(j);
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(std::string("step measure: ") + e.what());
  } catch (const json::exception& e) {
    throw ParseError(std::string("step measure: ") + e.what());
  }
}

json certificate_to_json(const DivergenceCertificate& c) {
  return {{"n", c.n},
          {"eigencheck", c.eigencheck},
          {"gm_minus_one", c.gm_minus_one},
          {"parity_verdict", c.parity_verdict},
          {"invariance_check", c.invariance_check},
          {"rank_P_plus_I", c.rank_p_plus_id}};
}

json profile_to_json(const DimensionProfile& p, int digits) {
  return {{"d", p.d},
          {"theta_r1", format_decimal(p.theta_r1, digits)},
          {"theta_r2", format_decimal(p.theta_r2, digits)},
          {"theta_r3", format_decimal(p.theta_r3, digits)},
          {"theta_r4", format_decimal(p.theta_r4, digits)},
          {"c_upper", format_decimal(p.c_upper, digits)},
          {"lambda_lower", format_decimal(p.lambda_lower, digits)},
          {"radius", format_decimal(p.radius, digits)},
          {"radius_excess", format_decimal(p.radius_excess, digits)},
          {"log10_radius_excess", format_decimal(p.log10_radius_excess, digits)},
          {"delay_r", format_decimal(p.delay_r, digits)},
          {"theta_variant", std::string(to_string(p.theta_variant))},
          {"gain_radius", std::string(to_string(p.gain_radius))}};
}

}  // namespace magnus_lab
