#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <vector>

#include "core/model.hpp"
#include "core/rk.hpp"
#include "core/types.hpp"

namespace sirchaos {

struct LyapunovEstimate {
  double lambda1 = 0.0;    // 1/year, natural-log base
  double std_error = 0.0;  // block standard error
  bool converged = true;   // false when std_error > 0.02
  bool has_spectrum = false;
  std::array<double, 3> spectrum{};  // sorted descending when present
};

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t& s) {
  s += 0x9e3779b97f4a7c15ull;
  std::uint64_t z = s;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

inline double uniform_pm1(std::uint64_t& s) {
  return 2.0 * ((splitmix64(s) >> 11) * 0x1.0p-53) - 1.0;
}

// Deterministic unit vectors; the same seed always yields the same tangent
// frame, which keeps scan outputs reproducible.
inline std::array<double, 3> random_unit_vector(std::uint64_t& s) {
  while (true) {
    std::array<double, 3> v = {uniform_pm1(s), uniform_pm1(s), uniform_pm1(s)};
    const double n2 = v[0] * v[0] + v[1] * v[1] + v[2] * v[2];
    if (n2 < 1e-4 || n2 > 1.0) continue;
    const double inv = 1.0 / std::sqrt(n2);
    for (double& c : v) c *= inv;
    return v;
  }
}

// State plus K tangent vectors evolved under the variational equations.
template <typename Sys, std::size_t K>
struct TangentSystem {
  const Sys* sys;

  void operator()(double t, const rk::Vec<3 + 3 * K>& y,
                  rk::Vec<3 + 3 * K>& dy) const {
    std::array<double, 3> x = {y[0], y[1], y[2]};
    std::array<double, 3> fx;
    Mat3 jac;
    sys->rhs_jac(t, x, fx, jac);
    dy[0] = fx[0];
    dy[1] = fx[1];
    dy[2] = fx[2];
    for (std::size_t k = 0; k < K; ++k) {
      const double* v = y.data() + 3 + 3 * k;
      double* dv = dy.data() + 3 + 3 * k;
      for (int i = 0; i < 3; ++i)
        dv[i] = jac[i][0] * v[0] + jac[i][1] * v[1] + jac[i][2] * v[2];
    }
  }
};

// Mean of per-block averages and their standard error. `logs` holds one
// log-norm per renormalization; blocks are contiguous chunks of them.
struct BlockStats {
  double mean = 0.0;
  double std_error = 0.0;
};

inline BlockStats block_statistics(const std::vector<double>& logs,
                                   int block_count, double renorm_interval) {
  const std::size_t n = logs.size();
  const auto blocks = static_cast<std::size_t>(block_count);
  std::vector<double> means(blocks);
  for (std::size_t b = 0; b < blocks; ++b) {
    const std::size_t lo = b * n / blocks;
    const std::size_t hi = (b + 1) * n / blocks;
    double sum = 0.0;
    for (std::size_t k = lo; k < hi; ++k) sum += logs[k];
    means[b] = sum / (static_cast<double>(hi - lo) * renorm_interval);
  }
  BlockStats st;
  st.mean = std::accumulate(means.begin(), means.end(), 0.0) /
            static_cast<double>(blocks);
  double var = 0.0;
  for (double m : means) var += (m - st.mean) * (m - st.mean);
  var /= static_cast<double>(blocks - 1);
  st.std_error = std::sqrt(var / static_cast<double>(blocks));
  return st;
}

template <typename Sys>
std::array<double, 3> run_transient(const Sys& sys,
                                    const std::array<double, 3>& x0,
                                    double transient,
                                    const IntegratorConfig& integ) {
  if (transient <= 0.0) return x0;
  auto wrap = [&sys](double t, const rk::Vec<3>& y, rk::Vec<3>& dy) {
    sys.rhs(t, y, dy);
  };
  rk::Dopri5<3, decltype(wrap)> stepper(wrap, integ, 0.0, x0);
  stepper.advance_to(transient);
  return stepper.state();
}

}  // namespace detail

/// Largest Lyapunov exponent of `sys` from one tangent vector renormalized
/// every cfg.renorm_interval years (Benettin, variational form).
template <typename Sys>
LyapunovEstimate largest_exponent_of(const Sys& sys,
                                     const std::array<double, 3>& x0,
                                     const LyapunovConfig& cfg,
                                     const IntegratorConfig& integ) {
  validate(cfg);
  validate(integ);

  const auto x = detail::run_transient(sys, x0, cfg.transient, integ);

  std::uint64_t rng = cfg.seed;
  const auto xi = detail::random_unit_vector(rng);

  detail::TangentSystem<Sys, 1> tangent{&sys};
  rk::Vec<6> y = {x[0], x[1], x[2], xi[0], xi[1], xi[2]};
  rk::Dopri5<6, decltype(tangent)> stepper(tangent, integ, cfg.transient, y);

  const auto chunks = static_cast<std::size_t>(
      std::llround(cfg.total_time / cfg.renorm_interval));
  std::vector<double> logs;
  logs.reserve(chunks);
  for (std::size_t c = 0; c < chunks; ++c) {
    stepper.advance_to(cfg.transient +
                       static_cast<double>(c + 1) * cfg.renorm_interval);
    auto state = stepper.state();
    const double norm = std::sqrt(state[3] * state[3] + state[4] * state[4] +
                                  state[5] * state[5]);
    logs.push_back(std::log(norm));
    const double inv = 1.0 / norm;
    state[3] *= inv;
    state[4] *= inv;
    state[5] *= inv;
    stepper.set_state(state);
  }

  const auto st =
      detail::block_statistics(logs, cfg.block_count, cfg.renorm_interval);
  LyapunovEstimate est;
  est.lambda1 =
      std::accumulate(logs.begin(), logs.end(), 0.0) /
      (static_cast<double>(chunks) * cfg.renorm_interval);
  est.std_error = st.std_error;
  est.converged = est.std_error <= 0.02;
  return est;
}

/// Full 3-exponent spectrum via Gram-Schmidt reorthonormalization of three
/// tangent vectors.
template <typename Sys>
LyapunovEstimate exponent_spectrum_of(const Sys& sys,
                                      const std::array<double, 3>& x0,
                                      const LyapunovConfig& cfg,
                                      const IntegratorConfig& integ) {
  validate(cfg);
  validate(integ);

  const auto x = detail::run_transient(sys, x0, cfg.transient, integ);

  std::uint64_t rng = cfg.seed;
  std::array<std::array<double, 3>, 3> frame;
  for (auto& v : frame) v = detail::random_unit_vector(rng);
  // orthonormalize the start frame
  for (int j = 0; j < 3; ++j) {
    for (int k = 0; k < j; ++k) {
      double dot = 0.0;
      for (int i = 0; i < 3; ++i) dot += frame[j][i] * frame[k][i];
      for (int i = 0; i < 3; ++i) frame[j][i] -= dot * frame[k][i];
    }
    double n = 0.0;
    for (int i = 0; i < 3; ++i) n += frame[j][i] * frame[j][i];
    n = std::sqrt(n);
    for (int i = 0; i < 3; ++i) frame[j][i] /= n;
  }

  detail::TangentSystem<Sys, 3> tangent{&sys};
  rk::Vec<12> y;
  y[0] = x[0];
  y[1] = x[1];
  y[2] = x[2];
  for (int j = 0; j < 3; ++j)
    for (int i = 0; i < 3; ++i) y[3 + 3 * j + i] = frame[j][i];
  rk::Dopri5<12, decltype(tangent)> stepper(tangent, integ, cfg.transient, y);

  const auto chunks = static_cast<std::size_t>(
      std::llround(cfg.total_time / cfg.renorm_interval));
  std::array<std::vector<double>, 3> logs;
  for (auto& l : logs) l.reserve(chunks);

  for (std::size_t c = 0; c < chunks; ++c) {
    stepper.advance_to(cfg.transient +
                       static_cast<double>(c + 1) * cfg.renorm_interval);
    auto state = stepper.state();
    // modified Gram-Schmidt on the three tangent blocks
    for (int j = 0; j < 3; ++j) {
      double* vj = state.data() + 3 + 3 * j;
      for (int k = 0; k < j; ++k) {
        const double* vk = state.data() + 3 + 3 * k;
        const double dot = vj[0] * vk[0] + vj[1] * vk[1] + vj[2] * vk[2];
        for (int i = 0; i < 3; ++i) vj[i] -= dot * vk[i];
      }
      const double norm =
          std::sqrt(vj[0] * vj[0] + vj[1] * vj[1] + vj[2] * vj[2]);
      logs[j].push_back(std::log(norm));
      for (int i = 0; i < 3; ++i) vj[i] /= norm;
    }
    stepper.set_state(state);
  }

  std::array<double, 3> exps;
  std::array<detail::BlockStats, 3> stats;
  for (int j = 0; j < 3; ++j) {
    stats[j] =
        detail::block_statistics(logs[j], cfg.block_count, cfg.renorm_interval);
    exps[j] = std::accumulate(logs[j].begin(), logs[j].end(), 0.0) /
              (static_cast<double>(chunks) * cfg.renorm_interval);
  }

  std::array<int, 3> order = {0, 1, 2};
  std::sort(order.begin(), order.end(),
            [&exps](int a, int b) { return exps[a] > exps[b]; });

  LyapunovEstimate est;
  est.has_spectrum = true;
  for (int j = 0; j < 3; ++j) est.spectrum[j] = exps[order[j]];
  est.lambda1 = est.spectrum[0];
  est.std_error = stats[order[0]].std_error;
  est.converged = est.std_error <= 0.02;
  return est;
}

/// SIR-system entry points.
LyapunovEstimate largest_exponent(const StateVec& x0, const ModelParams& p,
                                  const LyapunovConfig& cfg,
                                  const IntegratorConfig& integ);
LyapunovEstimate exponent_spectrum(const StateVec& x0, const ModelParams& p,
                                   const LyapunovConfig& cfg,
                                   const IntegratorConfig& integ);

}  // namespace sirchaos
