#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"
#include "magnus_lab/version.hpp"

using namespace magnus_lab;
using namespace magnus_lab::cli;

namespace {

int emit(const CommandResult& r, bool csv, const std::string& out_path) {
  const std::string text = csv ? r.csv : r.report.dump(2) + "\n";
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path);
    if (!out) {
      std::cerr << "error: cannot write '" << out_path << "'\n";
      return kExitUsage;
    }
    out << text;
  }
  return r.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Magnus expansion counterexamples and convergence bounds"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  bool csv = false;
  std::string out_path;
  app.add_flag("--csv", csv, "print the main table as CSV instead of JSON");
  app.add_option("--out", out_path, "write output to a file");

  GenMinimalOptions gm;
  auto* gen = app.add_subcommand("gen-minimal", "minimal 2x2 counterexample pair and its Magnus terms");
  gen->add_option("--alpha", gm.alpha, "angle: radians, or a multiple of pi like 2pi/3");
  gen->add_option("--eps", gm.eps, "off-diagonal parameter (nonzero)");
  gen->add_option("--order", gm.order, "number of Magnus terms");
  gen->add_option("--norm", gm.norm, "l1, linf or l2");

  CertifyOptions co;
  auto* cert = app.add_subcommand("certify", "divergence certificate for the parabolic family psi_n");
  cert->add_option("--n", co.n, "matrix size (>= 2)");

  BoundsOptions bo;
  auto* bnd = app.add_subcommand("bounds", "dimension-dependent constants");
  bnd->add_option("--d-min", bo.d_min);
  bnd->add_option("--d-max", bo.d_max);
  bnd->add_option("--theta", bo.theta, "covering density estimate: r1, r2, r3, r4");
  bnd->add_option("--gain-r", bo.gain_r, "covering radius choice: simple or optimal");

  MagnusOptions mo;
  auto* mag = app.add_subcommand("magnus", "Magnus terms of a step measure read from JSON");
  mag->add_option("measure_file", mo.measure_file)->required();
  mag->add_option("--order", mo.order);
  mag->add_option("--norm", mo.norm);
  mag->add_option("--lambda", mo.lambdas, "comma separated list")->delimiter(',');

  GainTestOptions go;
  auto* gain = app.add_subcommand("gain-test", "Monte Carlo check of the second-term gain bound");
  gain->add_option("--trials", go.trials);
  gain->add_option("--seed", go.seed);
  gain->add_option("--lambda", go.lambdas, "comma separated list")->delimiter(',');
  gain->add_option("--max-steps", go.max_steps);

  for (auto* sub : {gen, cert, bnd, mag, gain}) {
    sub->add_flag("--csv", csv);
    sub->add_option("--out", out_path);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*gen) return emit(gen_minimal(gm), csv, out_path);
    if (*cert) return emit(certify(co), csv, out_path);
    if (*bnd) return emit(bounds(bo), csv, out_path);
    if (*mag) return emit(magnus(mo), csv, out_path);
    if (*gain) return emit(gain_test(go), csv, out_path);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitVerdictFalse;
  }
  return kExitUsage;
}
