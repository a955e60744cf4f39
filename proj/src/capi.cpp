#include "sirchaos.h"

#include <cstring>
#include <new>

#include "core/integrate.hpp"
#include "core/lyapunov.hpp"
#include "core/model.hpp"
#include "core/scan.hpp"
#include "core/types.hpp"

using namespace sirchaos;

struct sir_trajectory {
  Trajectory traj;
};

struct sir_strobe {
  StrobeSeries series;
};

struct sir_scan {
  ScanResult result;
};

struct sir_grid {
  std::vector<DensityCell> cells;
};

namespace {

constexpr const char* kVersion = "0.1.0";

ModelParams to_core(const sir_params& p) {
  ModelParams m;
  m.sigma = p.sigma;
  m.mu = p.mu;
  m.gamma = p.gamma;
  m.forcing.beta0 = p.beta0;
  m.forcing.epsilon = p.epsilon;
  m.forcing.shape =
      p.shape == SIR_SHAPE_COSINE ? ForcingShape::kCosine : ForcingShape::kKot;
  m.vaccination.v0 = p.v0;
  m.vaccination.alpha = p.alpha;
  m.vaccination.r = p.r;
  m.vaccination.phi = p.phi;
  return m;
}

IntegratorConfig to_core(const sir_integ_config& c) {
  IntegratorConfig cfg;
  cfg.rel_tol = c.rel_tol;
  cfg.abs_tol = c.abs_tol;
  cfg.max_step = c.max_step;
  cfg.min_step = c.min_step;
  cfg.transient = c.transient;
  cfg.sample_window = c.sample_window;
  return cfg;
}

LyapunovConfig to_core(const sir_lyap_config& c) {
  LyapunovConfig cfg;
  cfg.total_time = c.total_time;
  cfg.renorm_interval = c.renorm_interval;
  cfg.transient = c.transient;
  cfg.block_count = c.block_count;
  cfg.seed = c.seed;
  return cfg;
}

StateVec to_state(const double y[3]) { return {y[0], y[1], y[2]}; }

void to_c(const LyapunovEstimate& est, sir_lyap_estimate* out) {
  out->lambda1 = est.lambda1;
  out->std_error = est.std_error;
  out->converged = est.converged ? 1 : 0;
  out->has_spectrum = est.has_spectrum ? 1 : 0;
  for (int i = 0; i < 3; ++i)
    out->spectrum[i] = est.has_spectrum ? est.spectrum[i] : 0.0;
}

int status_of(const IntegrationError& e) {
  return e.kind() == IntegrationError::Kind::kStepSizeUnderflow
             ? SIR_ERR_STEP_UNDERFLOW
             : SIR_ERR_NONFINITE;
}

template <typename Fn>
int guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const ValidationError&) {
    return SIR_ERR_INVALID;
  } catch (const IntegrationError& e) {
    return status_of(e);
  } catch (const std::bad_alloc&) {
    return SIR_ERR_INTERNAL;
  } catch (...) {
    return SIR_ERR_INTERNAL;
  }
}

}  // namespace

extern "C" {

const char* sir_version(void) { return kVersion; }

const char* sir_status_message(int status) {
  switch (status) {
    case SIR_OK: return "ok";
    case SIR_ERR_INVALID: return "invalid argument or configuration";
    case SIR_ERR_STEP_UNDERFLOW: return "required step size below min_step";
    case SIR_ERR_NONFINITE: return "state became non-finite";
    case SIR_ERR_RANGE: return "index out of range";
    default: return "internal error";
  }
}

void sir_params_default(sir_params* p) {
  const ModelParams m;
  p->sigma = m.sigma;
  p->mu = m.mu;
  p->gamma = m.gamma;
  p->beta0 = m.forcing.beta0;
  p->epsilon = m.forcing.epsilon;
  p->shape = SIR_SHAPE_KOT;
  p->v0 = m.vaccination.v0;
  p->alpha = m.vaccination.alpha;
  p->r = m.vaccination.r;
  p->phi = m.vaccination.phi;
}

void sir_integ_config_default(sir_integ_config* cfg) {
  const IntegratorConfig c;
  cfg->rel_tol = c.rel_tol;
  cfg->abs_tol = c.abs_tol;
  cfg->max_step = c.max_step;
  cfg->min_step = c.min_step;
  cfg->transient = c.transient;
  cfg->sample_window = c.sample_window;
}

void sir_lyap_config_default(sir_lyap_config* cfg) {
  const LyapunovConfig c;
  cfg->total_time = c.total_time;
  cfg->renorm_interval = c.renorm_interval;
  cfg->transient = c.transient;
  cfg->block_count = c.block_count;
  cfg->seed = c.seed;
}

int sir_params_validate(const sir_params* p, char* msg, size_t msg_len) {
  if (!p) return SIR_ERR_INVALID;
  try {
    validate(to_core(*p));
    if (msg && msg_len) msg[0] = '\0';
    return SIR_OK;
  } catch (const ValidationError& e) {
    if (msg && msg_len) {
      std::strncpy(msg, e.what(), msg_len - 1);
      msg[msg_len - 1] = '\0';
    }
    return SIR_ERR_INVALID;
  }
}

double sir_kot_shape(double theta) { return kot_shape(theta); }

double sir_contact_rate(double t, const sir_params* p) {
  return contact_rate(t, to_core(*p).forcing);
}

double sir_vaccination_rate(double t, const sir_params* p) {
  return vaccination_rate(t, to_core(*p).vaccination);
}

int sir_vector_field(double t, const double y[3], const sir_params* p,
                     double dy[3]) {
  if (!p || !y || !dy) return SIR_ERR_INVALID;
  std::array<double, 3> out;
  SirSystem{to_core(*p)}.rhs(t, {y[0], y[1], y[2]}, out);
  dy[0] = out[0];
  dy[1] = out[1];
  dy[2] = out[2];
  return SIR_OK;
}

int sir_jacobian(double t, const double y[3], const sir_params* p,
                 double jac[9]) {
  if (!p || !y || !jac) return SIR_ERR_INVALID;
  std::array<double, 3> dy;
  Mat3 m;
  SirSystem{to_core(*p)}.rhs_jac(t, {y[0], y[1], y[2]}, dy, m);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) jac[3 * i + j] = m[i][j];
  return SIR_OK;
}

double sir_basic_reproduction_number(const sir_params* p) {
  return basic_reproduction_number(to_core(*p));
}

int sir_equilibria(const sir_params* p, double dfe[3], double ee[3],
                   int* ee_physical) {
  if (!p || !dfe || !ee) return SIR_ERR_INVALID;
  return guarded([&] {
    const auto eq = equilibria(to_core(*p));
    const auto d = eq.dfe.to_array();
    const auto e = eq.ee.to_array();
    for (int i = 0; i < 3; ++i) {
      dfe[i] = d[i];
      ee[i] = e[i];
    }
    if (ee_physical) *ee_physical = eq.ee_physical ? 1 : 0;
    return SIR_OK;
  });
}

int sir_integrate(const sir_params* p, const sir_integ_config* cfg,
                  const double y0[3], double t0, double t1,
                  double sample_every, sir_trajectory** out) {
  if (!p || !cfg || !y0 || !out) return SIR_ERR_INVALID;
  *out = nullptr;
  return guarded([&] {
    auto traj = integrate(to_state(y0), t0, t1, to_core(*p), to_core(*cfg),
                          sample_every);
    *out = new sir_trajectory{std::move(traj)};
    return SIR_OK;
  });
}

int sir_divergence_demo(const sir_params* p, const sir_integ_config* cfg,
                        const double y0[3], double delta, double duration,
                        double sample_every, sir_trajectory** out_a,
                        sir_trajectory** out_b) {
  if (!p || !cfg || !y0 || !out_a || !out_b) return SIR_ERR_INVALID;
  *out_a = nullptr;
  *out_b = nullptr;
  return guarded([&] {
    auto pair = divergence_demo(to_state(y0), delta, duration, to_core(*p),
                                to_core(*cfg), sample_every);
    *out_a = new sir_trajectory{std::move(pair.first)};
    *out_b = new sir_trajectory{std::move(pair.second)};
    return SIR_OK;
  });
}

size_t sir_trajectory_size(const sir_trajectory* t) {
  return t ? t->traj.size() : 0;
}

double sir_trajectory_time(const sir_trajectory* t, size_t index) {
  if (!t || index >= t->traj.size()) return 0.0;
  return t->traj.times[index];
}

int sir_trajectory_state(const sir_trajectory* t, size_t index, double y[3]) {
  if (!t || !y) return SIR_ERR_INVALID;
  if (index >= t->traj.size()) return SIR_ERR_RANGE;
  const auto a = t->traj.states[index].to_array();
  y[0] = a[0];
  y[1] = a[1];
  y[2] = a[2];
  return SIR_OK;
}

void sir_trajectory_free(sir_trajectory* t) { delete t; }

int sir_strobe_sample(const sir_params* p, const sir_integ_config* cfg,
                      const double y0[3], sir_strobe** out) {
  if (!p || !cfg || !y0 || !out) return SIR_ERR_INVALID;
  *out = nullptr;
  return guarded([&] {
    auto series = strobe_sample(to_state(y0), to_core(*p), to_core(*cfg));
    *out = new sir_strobe{std::move(series)};
    return SIR_OK;
  });
}

size_t sir_strobe_size(const sir_strobe* s) {
  return s ? s->series.samples.size() : 0;
}

int sir_strobe_state(const sir_strobe* s, size_t index, double y[3]) {
  if (!s || !y) return SIR_ERR_INVALID;
  if (index >= s->series.samples.size()) return SIR_ERR_RANGE;
  const auto a = s->series.samples[index].to_array();
  y[0] = a[0];
  y[1] = a[1];
  y[2] = a[2];
  return SIR_OK;
}

int sir_strobe_distinct(const sir_strobe* s, double tol) {
  if (!s) return 0;
  return count_distinct(s->series.samples, tol);
}

void sir_strobe_free(sir_strobe* s) { delete s; }

int sir_largest_exponent(const sir_params* p, const sir_integ_config* integ,
                         const sir_lyap_config* cfg, const double y0[3],
                         sir_lyap_estimate* out) {
  if (!p || !integ || !cfg || !y0 || !out) return SIR_ERR_INVALID;
  return guarded([&] {
    const auto est =
        largest_exponent(to_state(y0), to_core(*p), to_core(*cfg),
                         to_core(*integ));
    to_c(est, out);
    return SIR_OK;
  });
}

int sir_exponent_spectrum(const sir_params* p, const sir_integ_config* integ,
                          const sir_lyap_config* cfg, const double y0[3],
                          sir_lyap_estimate* out) {
  if (!p || !integ || !cfg || !y0 || !out) return SIR_ERR_INVALID;
  return guarded([&] {
    const auto est =
        exponent_spectrum(to_state(y0), to_core(*p), to_core(*cfg),
                          to_core(*integ));
    to_c(est, out);
    return SIR_OK;
  });
}

int sir_scan_run(const sir_scan_spec* spec, sir_scan** out) {
  if (!spec || !out) return SIR_ERR_INVALID;
  *out = nullptr;
  return guarded([&] {
    ScanSpec1D s;
    s.parameter = spec->parameter == SIR_PARAM_PHI ? ScanParameter::kPhi
                                                   : ScanParameter::kEpsilon;
    s.lo = spec->lo;
    s.hi = spec->hi;
    s.points = spec->points;
    s.base = to_core(spec->params);
    s.integ = to_core(spec->integ);
    s.lyap = to_core(spec->lyap);
    s.x0 = to_state(spec->y0);
    switch (spec->continuation) {
      case SIR_CONT_ASCENDING: s.continuation = Continuation::kAscending; break;
      case SIR_CONT_DESCENDING: s.continuation = Continuation::kDescending; break;
      default: s.continuation = Continuation::kNone; break;
    }
    ScanResult result;
    if (spec->with_strobe)
      result = bifurcation_scan(s, spec->with_lyapunov != 0, spec->workers);
    else
      result = lyapunov_scan_1d(s, spec->workers);
    *out = new sir_scan{std::move(result)};
    return SIR_OK;
  });
}

size_t sir_scan_point_count(const sir_scan* s) {
  return s ? s->result.rows.size() : 0;
}

double sir_scan_parameter_value(const sir_scan* s, size_t point) {
  if (!s || point >= s->result.rows.size()) return 0.0;
  return s->result.rows[point].param;
}

int sir_scan_point_status(const sir_scan* s, size_t point) {
  if (!s || point >= s->result.rows.size()) return SIR_ERR_RANGE;
  const auto& row = s->result.rows[point];
  if (!row.failed) return SIR_OK;
  return row.error.find("non-finite") != std::string::npos
             ? SIR_ERR_NONFINITE
             : SIR_ERR_STEP_UNDERFLOW;
}

double sir_scan_lambda1(const sir_scan* s, size_t point) {
  if (!s || point >= s->result.rows.size()) return 0.0;
  return s->result.rows[point].lambda1;
}

double sir_scan_std_error(const sir_scan* s, size_t point) {
  if (!s || point >= s->result.rows.size()) return 0.0;
  return s->result.rows[point].std_error;
}

size_t sir_scan_strobe_size(const sir_scan* s, size_t point) {
  if (!s || point >= s->result.rows.size()) return 0;
  return s->result.rows[point].strobe.size();
}

int sir_scan_strobe_state(const sir_scan* s, size_t point, size_t index,
                          double y[3]) {
  if (!s || !y) return SIR_ERR_INVALID;
  if (point >= s->result.rows.size()) return SIR_ERR_RANGE;
  const auto& strobe = s->result.rows[point].strobe;
  if (index >= strobe.size()) return SIR_ERR_RANGE;
  const auto a = strobe[index].to_array();
  y[0] = a[0];
  y[1] = a[1];
  y[2] = a[2];
  return SIR_OK;
}

void sir_scan_free(sir_scan* s) { delete s; }

int sir_grid_run(const sir_grid_spec* spec, sir_grid** out) {
  if (!spec || !out) return SIR_ERR_INVALID;
  *out = nullptr;
  return guarded([&] {
    GridSpec2D g;
    g.phi_lo = spec->phi_lo;
    g.phi_hi = spec->phi_hi;
    g.alpha_lo = spec->alpha_lo;
    g.alpha_hi = spec->alpha_hi;
    g.phi_points = spec->phi_points;
    g.alpha_points = spec->alpha_points;
    g.lambda_tol = spec->lambda_tol;
    g.base = to_core(spec->params);
    g.integ = to_core(spec->integ);
    g.lyap = to_core(spec->lyap);
    g.x0 = to_state(spec->y0);
    auto cells = density_grid(g, spec->workers);
    *out = new sir_grid{std::move(cells)};
    return SIR_OK;
  });
}

size_t sir_grid_cell_count(const sir_grid* g) {
  return g ? g->cells.size() : 0;
}

int sir_grid_cell(const sir_grid* g, size_t index, sir_density_cell* out) {
  if (!g || !out) return SIR_ERR_INVALID;
  if (index >= g->cells.size()) return SIR_ERR_RANGE;
  const auto& c = g->cells[index];
  out->phi = c.phi;
  out->alpha = c.alpha;
  out->lambda1 = c.lambda1;
  out->bin = static_cast<int>(c.bin);
  out->status = c.failed ? SIR_ERR_STEP_UNDERFLOW : SIR_OK;
  return SIR_OK;
}

void sir_grid_free(sir_grid* g) { delete g; }

int sir_classify_regime(double lambda1, double lambda_tol) {
  return static_cast<int>(classify_regime(lambda1, lambda_tol));
}

const char* sir_regime_name(int regime) {
  switch (regime) {
    case SIR_REGIME_WHITE: return "white";
    case SIR_REGIME_BLUE: return "blue";
    case SIR_REGIME_GREEN: return "green";
    case SIR_REGIME_RED: return "red";
    case SIR_REGIME_ORANGE: return "orange";
    default: return "white";
  }
}

}  // extern "C"
