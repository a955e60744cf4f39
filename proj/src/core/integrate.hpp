#pragma once

#include <utility>
#include <vector>

#include "core/model.hpp"
#include "core/rk.hpp"
#include "core/types.hpp"

namespace sirchaos {

struct Trajectory {
  std::vector<double> times;
  std::vector<StateVec> states;

  std::size_t size() const { return times.size(); }
};

/// States captured once per model year after the transient.
struct StrobeSeries {
  double start_time = 0.0;  // time of the first sample
  std::vector<StateVec> samples;
};

/// Integrates the forced SIR system from t0 to t1, recording the state at
/// t0 + k * sample_every (each sample time hit exactly). t1 is always the
/// final record.
Trajectory integrate(const StateVec& x0, double t0, double t1,
                     const ModelParams& p, const IntegratorConfig& cfg,
                     double sample_every);

/// Runs through cfg.transient years, then records the state at every
/// integer model-year boundary for floor(cfg.sample_window) years.
StrobeSeries strobe_sample(const StateVec& x0, const ModelParams& p,
                           const IntegratorConfig& cfg);

/// Twin trajectories from x0 and x0 + (delta, 0, -delta) over `duration`
/// years, sampled on a common grid.
std::pair<Trajectory, Trajectory> divergence_demo(const StateVec& x0,
                                                  double delta,
                                                  double duration,
                                                  const ModelParams& p,
                                                  const IntegratorConfig& cfg,
                                                  double sample_every);

}  // namespace sirchaos
