#include "cli/commands.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "cli/csv.hpp"
#include "cli/svg.hpp"
#include "sirchaos.h"

namespace sircli {

namespace {

template <typename T, void (*Free)(T*)>
struct Handle {
  T* ptr = nullptr;
  ~Handle() { Free(ptr); }
  T** out() { return &ptr; }
  T* get() const { return ptr; }
};

using TrajectoryHandle = Handle<sir_trajectory, sir_trajectory_free>;
using ScanHandle = Handle<sir_scan, sir_scan_free>;
using GridHandle = Handle<sir_grid, sir_grid_free>;

void check(int status, const std::string& context) {
  if (status == SIR_OK) return;
  const std::string what = context + ": " + sir_status_message(status);
  if (status == SIR_ERR_INVALID) throw ValidationError(what);
  throw NumericalError(what);
}

std::string fd(double v) { return format_double(v); }

void maybe_render(const RunConfig& cfg, const std::string& kind) {
  if (!cfg.svg || kind.empty()) return;
  render_svg(read_csv(cfg.out), kind, cfg.out + ".svg");
}

void cmd_simulate(const RunConfig& cfg) {
  TrajectoryHandle a, b;
  if (cfg.divergence > 0.0) {
    check(sir_divergence_demo(&cfg.params, &cfg.integ, cfg.ic, cfg.divergence,
                              cfg.duration, cfg.cadence, a.out(), b.out()),
          "simulate");
  } else {
    check(sir_integrate(&cfg.params, &cfg.integ, cfg.ic, 0.0, cfg.duration,
                        cfg.cadence, a.out()),
          "simulate");
  }

  CsvWriter w(cfg.out);
  write_provenance(w, cfg);
  if (b.get())
    w.columns({"t", "S", "I", "R", "S2", "I2", "R2"});
  else
    w.columns({"t", "S", "I", "R"});

  const size_t n = sir_trajectory_size(a.get());
  for (size_t k = 0; k < n; ++k) {
    double ya[3], yb[3];
    sir_trajectory_state(a.get(), k, ya);
    std::vector<std::string> cells = {fd(sir_trajectory_time(a.get(), k)),
                                      fd(ya[0]), fd(ya[1]), fd(ya[2])};
    if (b.get()) {
      sir_trajectory_state(b.get(), k, yb);
      cells.push_back(fd(yb[0]));
      cells.push_back(fd(yb[1]));
      cells.push_back(fd(yb[2]));
    }
    w.row(cells);
  }
  w.close();
  maybe_render(cfg, "timeseries");
}

sir_scan_spec make_scan_spec(const RunConfig& cfg, int with_strobe,
                             int with_lyapunov) {
  sir_scan_spec spec{};
  spec.parameter = cfg.scan_parameter;
  spec.lo = cfg.scan_lo;
  spec.hi = cfg.scan_hi;
  spec.points = cfg.scan_points;
  spec.with_strobe = with_strobe;
  spec.with_lyapunov = with_lyapunov;
  spec.continuation = cfg.continuation;
  spec.workers = cfg.workers;
  spec.y0[0] = cfg.ic[0];
  spec.y0[1] = cfg.ic[1];
  spec.y0[2] = cfg.ic[2];
  spec.params = cfg.params;
  spec.integ = cfg.integ;
  spec.lyap = cfg.lyap;
  spec.lyap.seed = cfg.seed;
  return spec;
}

void cmd_bifurcate(const RunConfig& cfg) {
  const sir_scan_spec spec = make_scan_spec(cfg, 1, 0);
  ScanHandle scan;
  check(sir_scan_run(&spec, scan.out()), "bifurcate");

  CsvWriter w(cfg.out);
  write_provenance(w, cfg);
  w.columns({"param", "sample_index", "S", "I"});
  const size_t points = sir_scan_point_count(scan.get());
  for (size_t p = 0; p < points; ++p) {
    const std::string param = fd(sir_scan_parameter_value(scan.get(), p));
    if (sir_scan_point_status(scan.get(), p) != SIR_OK) {
      w.row({param, "-1", "nan", "nan"});  // failed point
      continue;
    }
    const size_t m = sir_scan_strobe_size(scan.get(), p);
    for (size_t k = 0; k < m; ++k) {
      double y[3];
      sir_scan_strobe_state(scan.get(), p, k, y);
      w.row({param, std::to_string(k), fd(y[0]), fd(y[1])});
    }
  }
  w.close();
  maybe_render(cfg, "bifurcation");
}

void cmd_lyapunov(const RunConfig& cfg) {
  CsvWriter w(cfg.out);
  write_provenance(w, cfg);
  w.columns({"param", "lambda1", "std_error"});

  if (cfg.scan_points <= 1) {
    sir_lyap_config lyap = cfg.lyap;
    lyap.seed = cfg.seed;
    sir_lyap_estimate est{};
    check(sir_largest_exponent(&cfg.params, &cfg.integ, &lyap, cfg.ic, &est),
          "lyapunov");
    const double param = cfg.scan_parameter == SIR_PARAM_PHI
                             ? cfg.params.phi
                             : cfg.params.epsilon;
    w.row({fd(param), fd(est.lambda1), fd(est.std_error)});
  } else {
    const sir_scan_spec spec = make_scan_spec(cfg, 0, 1);
    ScanHandle scan;
    check(sir_scan_run(&spec, scan.out()), "lyapunov");
    const size_t points = sir_scan_point_count(scan.get());
    for (size_t p = 0; p < points; ++p) {
      const std::string param = fd(sir_scan_parameter_value(scan.get(), p));
      if (sir_scan_point_status(scan.get(), p) != SIR_OK) {
        w.row({param, "nan", "nan"});
        continue;
      }
      w.row({param, fd(sir_scan_lambda1(scan.get(), p)),
             fd(sir_scan_std_error(scan.get(), p))});
    }
  }
  w.close();
  maybe_render(cfg, "lyapunov-curve");
}

void cmd_sweep(const RunConfig& cfg) {
  sir_grid_spec spec{};
  spec.phi_lo = cfg.grid_phi_lo;
  spec.phi_hi = cfg.grid_phi_hi;
  spec.alpha_lo = cfg.grid_alpha_lo;
  spec.alpha_hi = cfg.grid_alpha_hi;
  spec.phi_points = cfg.grid_phi_points;
  spec.alpha_points = cfg.grid_alpha_points;
  spec.lambda_tol = cfg.lambda_tol;
  spec.workers = cfg.workers;
  spec.y0[0] = cfg.ic[0];
  spec.y0[1] = cfg.ic[1];
  spec.y0[2] = cfg.ic[2];
  spec.params = cfg.params;
  spec.integ = cfg.integ;
  spec.lyap = cfg.lyap;
  spec.lyap.seed = cfg.seed;

  GridHandle grid;
  check(sir_grid_run(&spec, grid.out()), "sweep");

  CsvWriter w(cfg.out);
  write_provenance(w, cfg);
  w.columns({"phi", "alpha", "lambda1", "bin"});
  const size_t n = sir_grid_cell_count(grid.get());
  for (size_t k = 0; k < n; ++k) {
    sir_density_cell cell{};
    sir_grid_cell(grid.get(), k, &cell);
    if (cell.status != SIR_OK) {
      w.row({fd(cell.phi), fd(cell.alpha), "nan", "failed"});
      continue;
    }
    w.row({fd(cell.phi), fd(cell.alpha), fd(cell.lambda1),
           sir_regime_name(cell.bin)});
  }
  w.close();
  maybe_render(cfg, "density");
}

void cmd_equilibria(const RunConfig& cfg) {
  // the skeleton system: constant contact rate, no vaccination
  sir_params p = cfg.params;
  p.epsilon = 0.0;
  p.v0 = 0.0;
  p.alpha = 0.0;

  double dfe[3], ee[3];
  int physical = 0;
  check(sir_equilibria(&p, dfe, ee, &physical), "equilibria");

  CsvWriter w(cfg.out);
  write_provenance(w, cfg);
  w.comment("R0 = " + fd(sir_basic_reproduction_number(&p)));
  w.columns({"point", "S", "I", "R", "physical"});
  w.row({"dfe", fd(dfe[0]), fd(dfe[1]), fd(dfe[2]), "1"});
  w.row({"ee", fd(ee[0]), fd(ee[1]), fd(ee[2]), physical ? "1" : "0"});
  w.close();
}

void cmd_render(const RunConfig& cfg) {
  const std::string out = cfg.out.empty() ? cfg.in + ".svg" : cfg.out;
  render_svg(read_csv(cfg.in), cfg.kind, out);
}

}  // namespace

void run_command(const RunConfig& cfg) {
  if (cfg.command == "simulate") return cmd_simulate(cfg);
  if (cfg.command == "bifurcate") return cmd_bifurcate(cfg);
  if (cfg.command == "lyapunov") return cmd_lyapunov(cfg);
  if (cfg.command == "sweep") return cmd_sweep(cfg);
  if (cfg.command == "equilibria") return cmd_equilibria(cfg);
  if (cfg.command == "render") return cmd_render(cfg);
  throw UsageError("unknown command '" + cfg.command + "'");
}

}  // namespace sircli
