#include "core/lyapunov.hpp"

namespace sirchaos {

LyapunovEstimate largest_exponent(const StateVec& x0, const ModelParams& p,
                                  const LyapunovConfig& cfg,
                                  const IntegratorConfig& integ) {
  validate(p);
  validate_state(x0);
  return largest_exponent_of(SirSystem{p}, x0.to_array(), cfg, integ);
}

LyapunovEstimate exponent_spectrum(const StateVec& x0, const ModelParams& p,
                                   const LyapunovConfig& cfg,
                                   const IntegratorConfig& integ) {
  validate(p);
  validate_state(x0);
  return exponent_spectrum_of(SirSystem{p}, x0.to_array(), cfg, integ);
}

}  // namespace sirchaos
