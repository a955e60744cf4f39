#include "core/integrate.hpp"

#include <cmath>

namespace sirchaos {

namespace {

using Stepper = rk::Dopri5<3, SirSystem>;

Stepper make_stepper(const StateVec& x0, double t0, const ModelParams& p,
                     const IntegratorConfig& cfg) {
  validate(p);
  validate(cfg);
  validate_state(x0);
  return Stepper(SirSystem{p}, cfg, t0, x0.to_array());
}

}  // namespace

Trajectory integrate(const StateVec& x0, double t0, double t1,
                     const ModelParams& p, const IntegratorConfig& cfg,
                     double sample_every) {
  if (!(t1 > t0)) throw ValidationError("integrate requires t1 > t0");
  if (!(sample_every > 0.0))
    throw ValidationError("sample_every must be > 0");

  auto stepper = make_stepper(x0, t0, p, cfg);

  const double span = t1 - t0;
  const auto n = static_cast<std::size_t>(
      std::floor(span / sample_every * (1.0 + 1e-12)));

  Trajectory out;
  out.times.reserve(n + 2);
  out.states.reserve(n + 2);
  for (std::size_t k = 0; k <= n; ++k) {
    const double target =
        std::min(t0 + static_cast<double>(k) * sample_every, t1);
    stepper.advance_to(target);
    out.times.push_back(stepper.time());
    out.states.push_back(StateVec::from_array(stepper.state()));
  }
  if (out.times.back() < t1) {
    stepper.advance_to(t1);
    out.times.push_back(t1);
    out.states.push_back(StateVec::from_array(stepper.state()));
  }
  return out;
}

StrobeSeries strobe_sample(const StateVec& x0, const ModelParams& p,
                           const IntegratorConfig& cfg) {
  auto stepper = make_stepper(x0, 0.0, p, cfg);
  stepper.advance_to(cfg.transient);

  StrobeSeries out;
  out.start_time = stepper.time();
  const auto count = static_cast<std::size_t>(std::floor(cfg.sample_window));
  out.samples.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    out.samples.push_back(StateVec::from_array(stepper.state()));
    if (k + 1 < count) stepper.advance_to(out.start_time + double(k + 1));
  }
  return out;
}

std::pair<Trajectory, Trajectory> divergence_demo(const StateVec& x0,
                                                  double delta,
                                                  double duration,
                                                  const ModelParams& p,
                                                  const IntegratorConfig& cfg,
                                                  double sample_every) {
  if (delta < 0.0) throw ValidationError("delta must be >= 0");
  StateVec x1 = x0;
  x1.s += delta;
  x1.r -= delta;
  Trajectory a = integrate(x0, 0.0, duration, p, cfg, sample_every);
  Trajectory b = integrate(x1, 0.0, duration, p, cfg, sample_every);
  return {std::move(a), std::move(b)};
}

}  // namespace sirchaos
