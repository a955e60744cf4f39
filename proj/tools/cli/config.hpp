#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "sirchaos.h"

namespace sircli {

/// Bad flags, unknown keys, malformed values. Exit code 1.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A parameter or configuration invariant is violated. Exit code 1.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// File system failures. Exit code 3.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Fully resolved run configuration. Every field maps one-to-one onto a
/// dotted config key; flags mirror the keys.
struct RunConfig {
  RunConfig() {
    sir_params_default(&params);
    sir_integ_config_default(&integ);
    sir_lyap_config_default(&lyap);
  }

  std::string command;

  sir_params params{};
  sir_integ_config integ{};
  sir_lyap_config lyap{};

  int scan_parameter = SIR_PARAM_EPSILON;
  double scan_lo = 0.134;
  double scan_hi = 0.14;
  int scan_points = 601;
  int continuation = SIR_CONT_NONE;
  double lambda_tol = 0.001;

  double grid_phi_lo = 0.0;
  double grid_phi_hi = 6.283185307179586476925286766559;
  double grid_alpha_lo = 0.001;
  double grid_alpha_hi = 0.01;
  int grid_phi_points = 126;
  int grid_alpha_points = 46;

  double ic[3] = {0.06, 0.001, 0.939};
  double duration = 200.0;
  double cadence = 0.01;
  double divergence = 0.0;
  int workers = 0;
  std::uint64_t seed = 1;
  std::string out;
  bool svg = false;

  std::string in;
  std::string kind;
};

/// Parses "0.5", "pi", "7pi/5", "1.5pi", "-pi/3" into radians.
double parse_angle(const std::string& text);

/// %.17g, which round-trips doubles exactly.
std::string format_double(double v);

/// Resolves command line tokens (argv[1..]) plus an optional --config file.
/// Precedence: flags > config file > per-command defaults > defaults.
RunConfig parse_config(const std::vector<std::string>& args);

/// Applies the `key = value` lines of a config file on top of cfg.
void apply_config_text(RunConfig& cfg, const std::string& text);

/// The full resolved configuration as re-parseable `key = value` lines.
std::string render_config(const RunConfig& cfg);

/// Post-parse invariant checks (delegates model checks to the library).
void validate_config(const RunConfig& cfg);

std::string usage_text();

}  // namespace sircli
