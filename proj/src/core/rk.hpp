#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <utility>

#include "core/types.hpp"

namespace sirchaos::rk {

template <std::size_t N>
using Vec = std::array<double, N>;

// Dormand-Prince 5(4) embedded pair with PI step-size control.
//
// Target times passed to advance_to() are hit exactly by truncating the
// step, never by interpolation, so sampled states do not carry dense-output
// error. The FSAL stage is reused across accepted steps.
template <std::size_t N, typename F>
class Dopri5 {
 public:
  Dopri5(F f, const IntegratorConfig& cfg, double t0, const Vec<N>& y0)
      : f_(std::move(f)), cfg_(cfg), t_(t0), y_(y0) {
    h_ = std::min(cfg_.max_step, 1e-3);
  }

  double time() const { return t_; }
  const Vec<N>& state() const { return y_; }

  // Replaces the state in place (tangent renormalization does this); the
  // cached FSAL derivative is invalidated.
  void set_state(const Vec<N>& y) {
    y_ = y;
    k1_valid_ = false;
  }

  // Integrates until time() == t_target exactly.
  void advance_to(double t_target) {
    while (t_ < t_target) {
      const double span = t_target - t_;
      const bool truncated = span <= h_;
      const double h = truncated ? span : h_;
      step_once(h, truncated, t_target);
    }
    t_ = t_target;
  }

 private:
  static constexpr double kSafety = 0.9;
  static constexpr double kMinFactor = 0.2;
  static constexpr double kMaxFactor = 10.0;

  void step_once(double h, bool truncated, double t_target) {
    if (!k1_valid_) {
      f_(t_, y_, k_[0]);
      k1_valid_ = true;
    }

    Vec<N> y_new;
    const double err = attempt(h, y_new);

    if (!std::isfinite(err)) {
      h_ = 0.1 * h;
      if (h_ < cfg_.min_step)
        throw IntegrationError(IntegrationError::Kind::kNonFiniteState, t_);
      return;
    }

    if (err > 1.0) {  // rejected
      const double shrink =
          std::clamp(kSafety * std::pow(err, -0.2), 0.1, 0.9);
      h_ = h * shrink;
      if (h_ < cfg_.min_step)
        throw IntegrationError(IntegrationError::Kind::kStepSizeUnderflow, t_);
      return;
    }

    // accepted; PI controller (Lund stabilization)
    const double grow = std::clamp(
        kSafety * std::pow(err, -0.17) * std::pow(err_prev_, 0.04),
        kMinFactor, kMaxFactor);
    const double h_next = std::min(h * grow, cfg_.max_step);
    h_ = truncated ? std::max(h_, h_next) : h_next;
    err_prev_ = std::max(err, 1e-4);

    const double t_new = t_ + h;
    t_ = (truncated && t_new >= t_target) ? t_target : t_new;
    y_ = y_new;
    k_[0] = k_[6];  // FSAL
  }

  // One trial step of size h; returns the scaled error norm and fills y_new.
  // k_[6] holds f(t + h, y_new) afterwards.
  double attempt(double h, Vec<N>& y_new) {
    constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;

    constexpr double a21 = 1.0 / 5;
    constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
    constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
    constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187,
                     a53 = 64448.0 / 6561, a54 = -212.0 / 729;
    constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33,
                     a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                     a65 = -5103.0 / 18656;
    constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                     b5 = -2187.0 / 6784, b6 = 11.0 / 84;
    constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                     e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;

    Vec<N> ys;
    for (std::size_t i = 0; i < N; ++i)
      ys[i] = y_[i] + h * a21 * k_[0][i];
    f_(t_ + c2 * h, ys, k_[1]);

    for (std::size_t i = 0; i < N; ++i)
      ys[i] = y_[i] + h * (a31 * k_[0][i] + a32 * k_[1][i]);
    f_(t_ + c3 * h, ys, k_[2]);

    for (std::size_t i = 0; i < N; ++i)
      ys[i] = y_[i] + h * (a41 * k_[0][i] + a42 * k_[1][i] + a43 * k_[2][i]);
    f_(t_ + c4 * h, ys, k_[3]);

    for (std::size_t i = 0; i < N; ++i)
      ys[i] = y_[i] + h * (a51 * k_[0][i] + a52 * k_[1][i] + a53 * k_[2][i] +
                           a54 * k_[3][i]);
    f_(t_ + c5 * h, ys, k_[4]);

    for (std::size_t i = 0; i < N; ++i)
      ys[i] = y_[i] + h * (a61 * k_[0][i] + a62 * k_[1][i] + a63 * k_[2][i] +
                           a64 * k_[3][i] + a65 * k_[4][i]);
    f_(t_ + h, ys, k_[5]);

    for (std::size_t i = 0; i < N; ++i)
      y_new[i] = y_[i] + h * (b1 * k_[0][i] + b3 * k_[2][i] + b4 * k_[3][i] +
                              b5 * k_[4][i] + b6 * k_[5][i]);
    f_(t_ + h, y_new, k_[6]);

    double sum = 0.0;
    for (std::size_t i = 0; i < N; ++i) {
      const double d = h * (e1 * k_[0][i] + e3 * k_[2][i] + e4 * k_[3][i] +
                            e5 * k_[4][i] + e6 * k_[5][i] + e7 * k_[6][i]);
      const double scale =
          cfg_.abs_tol +
          cfg_.rel_tol * std::max(std::abs(y_[i]), std::abs(y_new[i]));
      const double q = d / scale;
      sum += q * q;
    }
    return std::sqrt(sum / static_cast<double>(N));
  }

  F f_;
  IntegratorConfig cfg_;
  double t_;
  Vec<N> y_;
  std::array<Vec<N>, 7> k_{};
  double h_ = 1e-3;
  double err_prev_ = 1e-4;
  bool k1_valid_ = false;
};

}  // namespace sirchaos::rk
