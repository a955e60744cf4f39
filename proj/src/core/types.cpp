#include "core/types.hpp"

#include <cmath>
#include <sstream>

namespace sirchaos {

namespace {

std::string describe(IntegrationError::Kind kind, double t) {
  std::ostringstream os;
  switch (kind) {
    case IntegrationError::Kind::kStepSizeUnderflow:
      os << "required step size fell below min_step at t = " << t;
      break;
    case IntegrationError::Kind::kNonFiniteState:
      os << "state became non-finite at t = " << t;
      break;
  }
  return os.str();
}

[[noreturn]] void fail(const std::string& what) { throw ValidationError(what); }

void require(bool ok, const char* what) {
  if (!ok) fail(what);
}

}  // namespace

IntegrationError::IntegrationError(Kind kind, double t)
    : std::runtime_error(describe(kind, t)), kind_(kind), time_(t) {}

void validate(const ModelParams& p) {
  require(std::isfinite(p.sigma) && p.sigma >= 0.0, "sigma must be >= 0");
  require(std::isfinite(p.mu) && p.mu > 0.0, "mu must be > 0");
  require(std::isfinite(p.gamma) && p.gamma > 0.0, "gamma must be > 0");
  require(std::isfinite(p.forcing.beta0) && p.forcing.beta0 > 0.0,
          "beta0 must be > 0");
  require(p.forcing.epsilon >= 0.0 && p.forcing.epsilon <= 1.0,
          "epsilon must lie in [0, 1]");
  require(p.forcing.period == 1.0, "forcing period is fixed at 1 year");
  require(std::isfinite(p.vaccination.v0) && p.vaccination.v0 >= 0.0,
          "v0 must be >= 0");
  require(p.vaccination.alpha >= 0.0, "alpha must be >= 0");
  if (p.vaccination.alpha > p.vaccination.v0)
    fail("alpha must not exceed v0 (v(t) would go negative)");
  require(std::isfinite(p.vaccination.r) && p.vaccination.r > 0.0,
          "r must be > 0");
  require(p.vaccination.phi >= 0.0 && p.vaccination.phi <= kTwoPi,
          "phi must lie in [0, 2*pi]");
}

void validate(const IntegratorConfig& cfg) {
  require(cfg.rel_tol > 0.0 && cfg.abs_tol > 0.0,
          "tolerances must be positive");
  require(cfg.min_step > 0.0 && cfg.min_step <= cfg.max_step,
          "steps must satisfy 0 < min_step <= max_step");
  require(cfg.transient >= 0.0, "transient must be >= 0");
  require(cfg.sample_window >= 0.0, "sample_window must be >= 0");
}

void validate(const LyapunovConfig& cfg) {
  require(cfg.renorm_interval > 0.0, "renorm_interval must be > 0");
  require(cfg.total_time >= 100.0 * cfg.renorm_interval,
          "total_time must be at least 100 renormalization intervals");
  require(cfg.transient >= 0.0, "transient must be >= 0");
  require(cfg.block_count >= 2, "block_count must be >= 2");
}

void validate_state(const StateVec& x) {
  require(std::isfinite(x.s) && std::isfinite(x.i) && std::isfinite(x.r),
          "state components must be finite");
  require(x.s >= 0.0 && x.i >= 0.0 && x.r >= 0.0,
          "state components must be >= 0");
  if (std::abs(x.sum() - 1.0) > 1e-6)
    fail("state components must sum to 1 (within 1e-6)");
}

}  // namespace sirchaos
