#include "core/scan.hpp"

#include <atomic>
#include <cmath>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>

namespace sirchaos {

const char* regime_name(Regime r) {
  switch (r) {
    case Regime::kWhite: return "white";
    case Regime::kBlue: return "blue";
    case Regime::kGreen: return "green";
    case Regime::kRed: return "red";
    case Regime::kOrange: return "orange";
  }
  return "white";
}

Regime classify_regime(double lambda1, double lambda_tol) {
  if (lambda1 <= lambda_tol) return Regime::kWhite;
  if (lambda1 <= 0.005) return Regime::kBlue;
  if (lambda1 <= 0.01) return Regime::kGreen;
  if (lambda1 <= 0.015) return Regime::kRed;
  return Regime::kOrange;
}

double linspace_value(double lo, double hi, int points, int index) {
  if (points < 2) return lo;
  if (index == points - 1) return hi;
  return lo + static_cast<double>(index) * (hi - lo) /
                  static_cast<double>(points - 1);
}

void parallel_for_indexed(int n, int workers,
                          const std::function<void(int)>& fn) {
  if (workers <= 0) {
    const unsigned hw = std::thread::hardware_concurrency();
    workers = hw ? static_cast<int>(hw) : 1;
  }
  workers = std::min(workers, n);
  if (workers <= 1) {
    for (int i = 0; i < n; ++i) fn(i);
    return;
  }

  std::atomic<int> next{0};
  std::atomic<bool> aborted{false};
  std::exception_ptr first_error;
  std::mutex error_mutex;

  auto body = [&] {
    int i;
    while (!aborted.load(std::memory_order_relaxed) &&
           (i = next.fetch_add(1)) < n) {
      try {
        fn(i);
      } catch (...) {
        {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!first_error) first_error = std::current_exception();
        }
        aborted.store(true, std::memory_order_relaxed);
      }
    }
  };

  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  for (int w = 0; w < workers; ++w) pool.emplace_back(body);
  for (auto& t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error);
}

int count_distinct(std::span<const StateVec> samples, double tol) {
  std::vector<StateVec> reps;
  for (const auto& s : samples) {
    bool found = false;
    for (const auto& p : reps) {
      if (std::abs(s.s - p.s) <= tol && std::abs(s.i - p.i) <= tol) {
        found = true;
        break;
      }
    }
    if (!found) reps.push_back(s);
  }
  return static_cast<int>(reps.size());
}

namespace {

ModelParams with_parameter(const ModelParams& base, ScanParameter which,
                           double value) {
  ModelParams p = base;
  switch (which) {
    case ScanParameter::kEpsilon: p.forcing.epsilon = value; break;
    case ScanParameter::kPhi: p.vaccination.phi = value; break;
  }
  return p;
}

void validate_spec(const ScanSpec1D& spec) {
  if (!(spec.lo < spec.hi)) throw ValidationError("scan requires lo < hi");
  if (spec.points < 2) throw ValidationError("scan requires points >= 2");
  switch (spec.parameter) {
    case ScanParameter::kEpsilon:
      if (spec.lo < 0.0 || spec.hi > 1.0)
        throw ValidationError("epsilon scan range must lie in [0, 1]");
      break;
    case ScanParameter::kPhi:
      if (spec.lo < 0.0 || spec.hi > kTwoPi)
        throw ValidationError("phi scan range must lie in [0, 2*pi]");
      break;
  }
  validate(spec.integ);
  validate(spec.lyap);
  validate_state(spec.x0);
}

void evaluate_point(ScanRow& row, const StateVec& x0, const ModelParams& p,
                    const ScanSpec1D& spec, bool with_strobe,
                    bool with_lyapunov) {
  try {
    if (with_strobe) row.strobe = strobe_sample(x0, p, spec.integ).samples;
    if (with_lyapunov) {
      const auto est = largest_exponent(x0, p, spec.lyap, spec.integ);
      row.lambda1 = est.lambda1;
      row.std_error = est.std_error;
      row.lyap_converged = est.converged;
      row.has_lyapunov = true;
    }
  } catch (const IntegrationError& e) {
    row.failed = true;
    row.error = e.what();
  }
}

ScanResult run_scan(const ScanSpec1D& spec, bool with_strobe,
                    bool with_lyapunov, int workers) {
  validate_spec(spec);
  // every point must start from a valid parameter set
  validate(with_parameter(spec.base, spec.parameter, spec.lo));
  validate(with_parameter(spec.base, spec.parameter, spec.hi));

  ScanResult result;
  result.rows.resize(static_cast<std::size_t>(spec.points));
  for (int i = 0; i < spec.points; ++i)
    result.rows[static_cast<std::size_t>(i)].param =
        linspace_value(spec.lo, spec.hi, spec.points, i);

  if (spec.continuation == Continuation::kNone) {
    parallel_for_indexed(spec.points, workers, [&](int i) {
      ScanRow& row = result.rows[static_cast<std::size_t>(i)];
      const ModelParams p =
          with_parameter(spec.base, spec.parameter, row.param);
      evaluate_point(row, spec.x0, p, spec, with_strobe, with_lyapunov);
    });
    return result;
  }

  // Continuation: walk the branch sequentially, seeding each point with
  // the previous settled state. The carried state needs a strobe pass even
  // when only lambda1 was requested.
  StateVec seed = spec.x0;
  const bool ascending = spec.continuation == Continuation::kAscending;
  for (int k = 0; k < spec.points; ++k) {
    const int i = ascending ? k : spec.points - 1 - k;
    ScanRow& row = result.rows[static_cast<std::size_t>(i)];
    const ModelParams p = with_parameter(spec.base, spec.parameter, row.param);
    evaluate_point(row, seed, p, spec, true, with_lyapunov);
    if (row.failed) continue;  // next point restarts from the stale seed
    if (!row.strobe.empty()) seed = row.strobe.back();
    if (!with_strobe) row.strobe.clear();
  }
  return result;
}

}  // namespace

ScanResult bifurcation_scan(const ScanSpec1D& spec, bool with_lyapunov,
                            int workers) {
  return run_scan(spec, true, with_lyapunov, workers);
}

ScanResult lyapunov_scan_1d(const ScanSpec1D& spec, int workers) {
  return run_scan(spec, false, true, workers);
}

std::vector<DensityCell> density_grid(const GridSpec2D& spec, int workers) {
  if (!(spec.phi_lo <= spec.phi_hi) || !(spec.alpha_lo <= spec.alpha_hi))
    throw ValidationError("grid ranges must be ordered");
  if (spec.phi_points < 1 || spec.alpha_points < 1)
    throw ValidationError("grid needs at least one point per axis");
  if (!(spec.lambda_tol > 0.0 && spec.lambda_tol < 0.005))
    throw ValidationError("lambda_tol must lie in (0, 0.005)");
  validate(spec.integ);
  validate(spec.lyap);
  validate_state(spec.x0);

  const int n = spec.phi_points * spec.alpha_points;
  std::vector<DensityCell> cells(static_cast<std::size_t>(n));

  parallel_for_indexed(n, workers, [&](int idx) {
    const int ai = idx / spec.phi_points;
    const int pi = idx % spec.phi_points;
    DensityCell& cell = cells[static_cast<std::size_t>(idx)];
    cell.phi = linspace_value(spec.phi_lo, spec.phi_hi, spec.phi_points, pi);
    cell.alpha =
        linspace_value(spec.alpha_lo, spec.alpha_hi, spec.alpha_points, ai);
    ModelParams p = spec.base;
    p.vaccination.phi = cell.phi;
    p.vaccination.alpha = cell.alpha;
    try {
      const auto est = largest_exponent(spec.x0, p, spec.lyap, spec.integ);
      cell.lambda1 = est.lambda1;
      cell.bin = classify_regime(est.lambda1, spec.lambda_tol);
    } catch (const IntegrationError&) {
      cell.failed = true;
    }
  });
  return cells;
}

}  // namespace sirchaos
