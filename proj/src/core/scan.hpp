#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "core/integrate.hpp"
#include "core/lyapunov.hpp"
#include "core/types.hpp"

namespace sirchaos {

enum class ScanParameter { kEpsilon, kPhi };

/// Regime classes of the density plots; WHITE is regular, the rest grade
/// the size of the largest Lyapunov exponent.
enum class Regime { kWhite, kBlue, kGreen, kRed, kOrange };

const char* regime_name(Regime r);

/// lambda_tol replaces the exact lambda1 > 0 test, which estimator noise
/// makes unattainable.
Regime classify_regime(double lambda1, double lambda_tol = 0.001);

/// How the initial condition is chosen per scan point. kNone starts every
/// point from x0 (the default; no hysteresis artifacts). The continuation
/// modes walk the points in order, seeding each point with the settled
/// state of the previous one; they track one attractor branch through
/// coexistence regions and force sequential evaluation.
enum class Continuation { kNone, kAscending, kDescending };

struct ScanSpec1D {
  ScanParameter parameter = ScanParameter::kEpsilon;
  double lo = 0.134;
  double hi = 0.14;
  int points = 601;
  ModelParams base;
  IntegratorConfig integ;
  LyapunovConfig lyap;
  StateVec x0 = default_initial_state();
  Continuation continuation = Continuation::kNone;
};

struct ScanRow {
  double param = 0.0;
  std::vector<StateVec> strobe;
  double lambda1 = 0.0;
  double std_error = 0.0;
  bool lyap_converged = false;
  bool has_lyapunov = false;
  bool failed = false;
  std::string error;
};

struct ScanResult {
  std::vector<ScanRow> rows;
};

struct GridSpec2D {
  double phi_lo = 0.0;
  double phi_hi = kTwoPi;
  double alpha_lo = 0.001;
  double alpha_hi = 0.01;
  int phi_points = 126;
  int alpha_points = 46;
  ModelParams base;
  IntegratorConfig integ;
  LyapunovConfig lyap;
  StateVec x0 = default_initial_state();
  double lambda_tol = 0.001;
};

struct DensityCell {
  double phi = 0.0;
  double alpha = 0.0;
  double lambda1 = 0.0;
  Regime bin = Regime::kWhite;
  bool failed = false;
};

/// Endpoint-inclusive grid node; doubling the resolution re-produces the
/// coarse nodes bit-exactly.
double linspace_value(double lo, double hi, int points, int index);

/// Annual strobe samples per parameter value; attaches lambda1 per point
/// when with_lyapunov is set. Per-point failures are recorded in the row
/// and the scan continues. workers <= 0 uses all hardware threads.
ScanResult bifurcation_scan(const ScanSpec1D& spec, bool with_lyapunov = false,
                            int workers = 0);

/// lambda1 and its standard error per parameter value.
ScanResult lyapunov_scan_1d(const ScanSpec1D& spec, int workers = 0);

/// lambda1 on every (phi, alpha) node, classified; alpha-major order.
std::vector<DensityCell> density_grid(const GridSpec2D& spec, int workers = 0);

/// Number of distinct (S, I) pairs at the given resolution (max-metric).
int count_distinct(std::span<const StateVec> samples, double tol);

/// Runs fn(0..n-1) on a bounded worker pool; result ordering is the
/// caller's concern (each index writes its own slot).
void parallel_for_indexed(int n, int workers,
                          const std::function<void(int)>& fn);

}  // namespace sirchaos
