#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "magnus_lab/serialization.hpp"

namespace magnus_lab::cli {

/// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerdictFalse = 1;
inline constexpr int kExitUsage = 2;

/// Raised for invalid flag values; main() maps it to kExitUsage.
class UsageError : public Error {
 public:
  using Error::Error;
};

struct CommandResult {
  json report;      ///< {"command", "inputs", "outputs", "versions"}
  std::string csv;  ///< flattened main table
  int exit_code = kExitOk;
};

struct GenMinimalOptions {
  std::string alpha = "0";
  std::string eps = "1";
  std::size_t order = 40;
  std::string norm = "l1";
};

struct CertifyOptions {
  long n = 5;
};

struct BoundsOptions {
  long d_min = 3;
  long d_max = 30;
  std::string theta = "r1";
  std::string gain_r = "simple";
};

struct MagnusOptions {
  std::string measure_file;
  std::size_t order = 40;
  std::string norm = "l1";
  std::vector<std::string> lambdas{"1/2"};
};

struct GainTestOptions {
  std::size_t trials = 1000;
  std::uint64_t seed = 0;
  std::vector<std::string> lambdas{"0.1", "0.25", "0.5"};
  std::size_t max_steps = 6;
};

/// Angle text: "pi", "-pi/2", "2pi/3", "0.25*pi", or plain radians "1.2".
/// Multiples of pi are kept exact.
MinimalPair parse_minimal_pair(const std::string& alpha, const std::string& eps);

CommandResult gen_minimal(const GenMinimalOptions& o);
CommandResult certify(const CertifyOptions& o);
CommandResult bounds(const BoundsOptions& o);
CommandResult magnus(const MagnusOptions& o);
CommandResult gain_test(const GainTestOptions& o);

}  // namespace magnus_lab::cli
