#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "magnus_lab/bounds.hpp"
#include "magnus_lab/counterexamples.hpp"
#include "magnus_lab/error.hpp"
#include "magnus_lab/measures.hpp"
#include "magnus_lab/serialization.hpp"
#include "magnus_lab/version.hpp"

namespace py = pybind11;
using namespace magnus_lab;

namespace {

// Rationals cross the boundary as fractions.Fraction, via their text form.
py::object to_fraction(const mpq_class& q) {
  static py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(rational_to_string(q));
}

mpq_class from_python(const py::handle& h) {
  if (py::isinstance<py::float_>(h)) return mpq_class(h.cast<double>());
  return parse_rational(py::str(h).cast<std::string>());
}

py::list to_rows(const RationalMatrix& m) {
  py::list rows;
  for (std::size_t i = 0; i < m.size(); ++i) {
    py::list row;
    for (std::size_t j = 0; j < m.size(); ++j) row.append(to_fraction(m(i, j)));
    rows.append(row);
  }
  return rows;
}

std::vector<std::vector<double>> to_rows(const FloatMatrix& m) {
  std::vector<std::vector<double>> rows(m.size(), std::vector<double>(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) rows[i][j] = m(i, j);
  return rows;
}

RationalMatrix matrix_from_python(const py::sequence& rows) {
  RationalMatrix m(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    py::sequence row = rows[i];
    if (row.size() != rows.size()) throw SizeMismatch("matrix rows must have length " + std::to_string(rows.size()));
    for (std::size_t j = 0; j < row.size(); ++j) m(i, j) = from_python(row[j]);
  }
  return m;
}

// [(density, duration), ...]
StepMeasure measure_from_python(const py::sequence& steps) {
  std::vector<Step> out;
  for (const auto& s : steps) {
    py::sequence pair = py::reinterpret_borrow<py::sequence>(s);
    if (pair.size() != 2) throw DomainError("each step is a (density, duration) pair");
    out.push_back({matrix_from_python(pair[0]), from_python(pair[1])});
  }
  return StepMeasure(std::move(out));
}

py::list measure_to_python(const StepMeasure& phi) {
  py::list out;
  for (const auto& s : phi.steps()) out.append(py::make_tuple(to_rows(s.density), to_fraction(s.duration)));
  return out;
}

NormKind norm_arg(const std::string& text) { return parse_norm_kind(text); }

py::dict certificate_dict(const DivergenceCertificate& c) {
  py::dict d;
  d["n"] = c.n;
  d["eigencheck"] = c.eigencheck;
  d["gm_minus_one"] = c.gm_minus_one;
  d["parity_verdict"] = c.parity_verdict;
  d["invariance_check"] = c.invariance_check;
  d["rank_p_plus_id"] = c.rank_p_plus_id;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact Magnus-expansion experiments";
  m.attr("__version__") = kVersion;

  py::register_exception<Error>(m, "MagnusLabError", PyExc_ValueError);

  m.def("op_norm", [](const py::sequence& a, const std::string& kind) {
        const NormValue v = op_norm(matrix_from_python(a), norm_arg(kind));
        return v.exact ? to_fraction(*v.exact) : py::object(py::float_(v.value));
      }, py::arg("matrix"), py::arg("kind") = "l1");

  m.def("rexp_exact", [](const py::sequence& steps) { return to_rows(rexp_exact(measure_from_python(steps))); },
        py::arg("steps"));
  m.def("rexp_float", [](const py::sequence& steps) { return to_rows(rexp_float(measure_from_python(steps))); },
        py::arg("steps"));
  m.def("magnus_terms", [](const py::sequence& steps, std::size_t order) {
        py::list out;
        const MagnusTermSequence mu = magnus_terms(measure_from_python(steps), order);
        for (const auto& t : mu.terms) out.append(to_rows(t));
        return out;
      }, py::arg("steps"), py::arg("order"));
  m.def("weighted_second_term", [](const py::sequence& steps, const py::object& lam) {
        return to_rows(weighted_second_term(measure_from_python(steps), from_python(lam)));
      }, py::arg("steps"), py::arg("lam"));
  m.def("cumulative_norm", [](const py::sequence& steps, const std::string& kind) {
        const NormValue v = cumulative_norm(measure_from_python(steps), norm_arg(kind));
        return v.exact ? to_fraction(*v.exact) : py::object(py::float_(v.value));
      }, py::arg("steps"), py::arg("kind") = "l1");
  m.def("parse_measure", [](const std::string& text) {
        return measure_to_python(parse_step_measure(text));
      }, py::arg("text"), "Step measure from its JSON text, as [(density, duration), ...].");

  m.def("psi_measure", [](std::size_t n) {
        return measure_to_python(psi_measure(n));
      }, py::arg("n"));
  m.def("rexp_psi", [](std::size_t n) { return to_rows(rexp_exact(psi_measure(n))); }, py::arg("n"));
  m.def("certify_divergence", [](std::size_t n) { return certificate_dict(certify_divergence(n)); }, py::arg("n"));
  m.def("certify_matrix", [](const py::sequence& p) { return certificate_dict(certify_matrix(matrix_from_python(p))); },
        py::arg("matrix"));

  m.def("minimal_magnus_terms", [](const py::object& alpha_over_pi, const py::object& eps, std::size_t order) {
        const MinimalMagnusTerms t = minimal_magnus_terms(MinimalPair(from_python(alpha_over_pi), from_python(eps)), order);
        std::vector<std::vector<std::vector<double>>> out;
        for (const auto& x : t.terms) out.push_back(to_rows(x));
        return out;
      }, py::arg("alpha_over_pi"), py::arg("eps"), py::arg("order"));
  m.def("minimal_log_closed_form", [](const py::object& alpha_over_pi, const py::object& eps, double t) {
        return to_rows(minimal_log_closed_form(MinimalPair(from_python(alpha_over_pi), from_python(eps)), t));
      }, py::arg("alpha_over_pi"), py::arg("eps"), py::arg("t"));
  m.def("minimal_term_asymptote", [](const py::object& alpha_over_pi, const py::object& eps, std::size_t k) {
        return to_rows(minimal_term_asymptote(MinimalPair(from_python(alpha_over_pi), from_python(eps)), k));
      }, py::arg("alpha_over_pi"), py::arg("eps"), py::arg("k"));

  m.def("c_infinity", &c_infinity, py::arg("lam"));
  m.def("solve_lambda", &solve_lambda, py::arg("v"));
  m.def("c_upper_bound", &c_upper_bound, py::arg("d"));
  m.def("lambda_lower_bound", &lambda_lower_bound, py::arg("d"));
  m.def("rogers_theta", [](int n, const std::string& variant) { return rogers_theta(n, parse_theta_variant(variant)); },
        py::arg("n"), py::arg("variant") = "r1");
  m.def("gain_bound", [](int n, double lam, double omega) { return gain_bound(n, lam, omega); },
        py::arg("n"), py::arg("lam"), py::arg("omega"));
  m.def("magnus_radius", [](int n) {
        const MagnusRadius r = magnus_radius(n);
        py::dict d;
        d["radius"] = r.radius;
        d["excess"] = r.excess;
        d["log10_excess"] = r.log10_excess;
        d["gain_r"] = r.gain_r;
        return d;
      }, py::arg("n"));
  m.def("dimension_profile", [](int d) { return profile_to_json(dimension_profile(d), 17).dump(); }, py::arg("d"),
        "JSON text of the per-dimension bounds.");
}
