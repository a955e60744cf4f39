#pragma once

#include <array>
#include <cmath>

#include "core/types.hpp"

namespace sirchaos {

using Mat3 = std::array<std::array<double, 3>, 3>;

/// Rational periodic shape (2/3 + cos t)/(1 + (2/3) cos t), range [-1, 1].
/// The denominator is bounded below by 1/3, so no guard is needed.
inline double kot_shape(double theta) {
  const double c = std::cos(theta);
  return (2.0 / 3.0 + c) / (1.0 + (2.0 / 3.0) * c);
}

/// Contact rate beta(t) = beta0 * (1 + epsilon * shape(2*pi*t)).
inline double contact_rate(double t, const ForcingParams& f) {
  const double theta = kTwoPi * t;
  const double s =
      f.shape == ForcingShape::kKot ? kot_shape(theta) : std::cos(theta);
  return f.beta0 * (1.0 + f.epsilon * s);
}

/// Vaccination rate v(t) = v0 + alpha * shape(2*pi*r*t + phi).
inline double vaccination_rate(double t, const VaccinationParams& v) {
  if (v.alpha == 0.0) return v.v0;
  return v.v0 + v.alpha * kot_shape(kTwoPi * v.r * t + v.phi);
}

/// The forced SIR vector field and its analytic Jacobian, shared by the
/// plain integrator and the tangent-space (variational) machinery.
struct SirSystem {
  ModelParams p;

  void rhs(double t, const std::array<double, 3>& y,
           std::array<double, 3>& dy) const {
    const double beta = contact_rate(t, p.forcing);
    const double v = vaccination_rate(t, p.vaccination);
    const double infection = beta * y[0] * y[1];
    dy[0] = p.sigma - p.mu * y[0] - infection - v * y[0];
    dy[1] = infection - (p.gamma + p.mu) * y[1];
    dy[2] = p.gamma * y[1] - p.mu * y[2] + v * y[0];
  }

  // Evaluates field and Jacobian together so beta(t), v(t) are computed once.
  void rhs_jac(double t, const std::array<double, 3>& y,
               std::array<double, 3>& dy, Mat3& jac) const {
    const double beta = contact_rate(t, p.forcing);
    const double v = vaccination_rate(t, p.vaccination);
    const double infection = beta * y[0] * y[1];
    dy[0] = p.sigma - p.mu * y[0] - infection - v * y[0];
    dy[1] = infection - (p.gamma + p.mu) * y[1];
    dy[2] = p.gamma * y[1] - p.mu * y[2] + v * y[0];
    jac[0] = {-p.mu - beta * y[1] - v, -beta * y[0], 0.0};
    jac[1] = {beta * y[1], beta * y[0] - (p.gamma + p.mu), 0.0};
    jac[2] = {v, p.gamma, -p.mu};
  }

  void operator()(double t, const std::array<double, 3>& y,
                  std::array<double, 3>& dy) const {
    rhs(t, y, dy);
  }
};

StateVec vector_field(double t, const StateVec& x, const ModelParams& p);
Mat3 jacobian(double t, const StateVec& x, const ModelParams& p);

struct EquilibriumPair {
  StateVec dfe;
  StateVec ee;
  bool ee_physical = true;  // false when R0 < 1 leaves the EE with I < 0
};

/// Equilibria of the constant-rate skeleton. Requires epsilon = 0 and
/// v0 = alpha = 0; throws ValidationError otherwise.
EquilibriumPair equilibria(const ModelParams& p);

/// R0 = beta0 * sigma / (mu * (mu + gamma)).
double basic_reproduction_number(const ModelParams& p);

}  // namespace sirchaos
