#pragma once

#include "cli/config.hpp"

namespace sircli {

/// Numerical failure surfaced by the library. Exit code 2.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Dispatches the parsed command; throws the error types above.
void run_command(const RunConfig& cfg);

}  // namespace sircli
