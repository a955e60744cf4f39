#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace sirchaos {

inline constexpr double kTwoPi = 6.283185307179586476925286766559;

/// Shape of the periodic forcing applied to the contact rate.
enum class ForcingShape { kKot, kCosine };

/// Seasonal forcing of the contact rate beta(t), period fixed at one year.
struct ForcingParams {
  double beta0 = 1505.0;  // mean contact rate (1/year)
  double epsilon = 0.138; // degree of seasonality, in [0, 1]
  ForcingShape shape = ForcingShape::kKot;
  double period = 1.0;    // years; the model is defined for period == 1
};

/// Periodic vaccination rate v(t) = v0 + alpha * shape(2*pi*r*t + phi).
struct VaccinationParams {
  double v0 = 0.071;  // mean vaccination level (1/year)
  double alpha = 0.0; // perturbation amplitude (1/year), 0 <= alpha <= v0
  double r = 2.0;     // vaccination/contact frequency ratio
  double phi = 0.0;   // phase difference (radians), in [0, 2*pi]
};

struct ModelParams {
  double sigma = 0.01; // birth rate (1/year)
  double mu = 0.01;    // natural death rate (1/year)
  double gamma = 50.0; // recovery rate (1/year)
  ForcingParams forcing;
  VaccinationParams vaccination;
};

/// Population fractions at one time instant; s + i + r == 1 up to solver error.
struct StateVec {
  double s = 0.0;
  double i = 0.0;
  double r = 0.0;

  std::array<double, 3> to_array() const { return {s, i, r}; }
  static StateVec from_array(const std::array<double, 3>& a) {
    return {a[0], a[1], a[2]};
  }
  double sum() const { return s + i + r; }
};

/// The initial condition used throughout when none is given explicitly.
inline StateVec default_initial_state() { return {0.06, 0.001, 0.939}; }

struct IntegratorConfig {
  double rel_tol = 1e-10;
  double abs_tol = 1e-12;
  double max_step = 0.1;   // years
  double min_step = 1e-12; // years
  double transient = 500.0;      // years discarded before sampling
  double sample_window = 300.0;  // years of annual samples recorded
};

struct LyapunovConfig {
  double total_time = 3000.0;   // years of tangent accumulation
  double renorm_interval = 0.5; // years between renormalizations
  double transient = 500.0;     // years discarded before accumulation
  int block_count = 10;         // blocks for the standard-error estimate
  std::uint64_t seed = 1;       // seeds the initial tangent direction(s)
};

/// Raised when a parameter or configuration record violates an invariant.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when the integrator cannot continue.
class IntegrationError : public std::runtime_error {
 public:
  enum class Kind { kStepSizeUnderflow, kNonFiniteState };

  IntegrationError(Kind kind, double t);

  Kind kind() const { return kind_; }
  double time() const { return time_; }

 private:
  Kind kind_;
  double time_;
};

void validate(const ModelParams& p);
void validate(const IntegratorConfig& cfg);
void validate(const LyapunovConfig& cfg);
void validate_state(const StateVec& x);

}  // namespace sirchaos
