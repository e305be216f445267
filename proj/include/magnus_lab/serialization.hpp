#pragma once

#include <string>

#include <json.hpp>

#include "magnus_lab/bounds.hpp"
#include "magnus_lab/counterexamples.hpp"
#include "magnus_lab/measures.hpp"

namespace magnus_lab {

using json = nlohmann::json;

/// Decimal text with `digits` significant digits, trailing zeros kept
/// ("2.00000000000000" for 2 at 15 digits); "inf", "-inf", "nan" otherwise.
std::string format_decimal(double x, int digits = 15);

/// Significant digits for decimal output: MAGNUS_LAB_PRECISION if set to an
/// integer in [1, 40], else 15.
int output_precision();

/// Entries as "p/q" strings.
json matrix_to_json(const RationalMatrix& m);
/// Entries as decimal strings.
json matrix_to_json(const FloatMatrix& m, int digits);

/// Accepts a JSON integer, a JSON float (read through its shortest decimal
/// representation), or a string "p/q" / decimal.
mpq_class rational_from_json(const json& j);

/// {"n": int, "steps": [{"matrix": [[...]], "duration": "p/q"}]}
json step_measure_to_json(const StepMeasure& phi);
StepMeasure step_measure_from_json(const json& j);
/// Parses text; every failure surfaces as ParseError.
StepMeasure parse_step_measure(const std::string& text);

/// {"n", "eigencheck", "gm_minus_one", "parity_verdict", "invariance_check",
///  "rank_P_plus_I"}
json certificate_to_json(const DivergenceCertificate& c);

/// Real fields as decimal strings, plus "theta_variant" and "gain_radius".
json profile_to_json(const DimensionProfile& p, int digits);

}  // namespace magnus_lab
