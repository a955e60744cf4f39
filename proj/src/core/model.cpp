#include "core/model.hpp"

namespace sirchaos {

StateVec vector_field(double t, const StateVec& x, const ModelParams& p) {
  std::array<double, 3> dy;
  SirSystem{p}.rhs(t, x.to_array(), dy);
  return StateVec::from_array(dy);
}

Mat3 jacobian(double t, const StateVec& x, const ModelParams& p) {
  std::array<double, 3> dy;
  Mat3 jac;
  SirSystem{p}.rhs_jac(t, x.to_array(), dy, jac);
  return jac;
}

EquilibriumPair equilibria(const ModelParams& p) {
  validate(p);
  if (p.forcing.epsilon != 0.0)
    throw ValidationError("equilibria require a constant contact rate (epsilon = 0)");
  if (p.vaccination.v0 != 0.0 || p.vaccination.alpha != 0.0)
    throw ValidationError("equilibria require no vaccination (v0 = alpha = 0)");

  EquilibriumPair eq;
  eq.dfe = {p.sigma / p.mu, 0.0, 0.0};

  const double r0 = basic_reproduction_number(p);
  const double beta0 = p.forcing.beta0;
  eq.ee = {(p.gamma + p.mu) / beta0, (p.mu / beta0) * (r0 - 1.0),
           (p.gamma / beta0) * (r0 - 1.0)};
  eq.ee_physical = r0 >= 1.0;
  return eq;
}

double basic_reproduction_number(const ModelParams& p) {
  return p.forcing.beta0 * p.sigma / (p.mu * (p.mu + p.gamma));
}

}  // namespace sirchaos
