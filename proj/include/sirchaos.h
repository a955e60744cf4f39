/* sirchaos: seasonally forced SIR dynamics with a phase-controlled
 * vaccination perturbation.
 *
 * C API of the shared library. Result objects are opaque handles released
 * with the matching *_free function; every fallible call returns a status
 * code from sir_status. */
#ifndef SIRCHAOS_H
#define SIRCHAOS_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sir_status {
  SIR_OK = 0,
  SIR_ERR_INVALID = 1,        /* invalid argument or configuration */
  SIR_ERR_STEP_UNDERFLOW = 2, /* required step below min_step */
  SIR_ERR_NONFINITE = 3,      /* state became NaN/Inf */
  SIR_ERR_RANGE = 4,          /* index out of range */
  SIR_ERR_INTERNAL = 5
} sir_status;

typedef enum sir_forcing_shape {
  SIR_SHAPE_KOT = 0,
  SIR_SHAPE_COSINE = 1
} sir_forcing_shape;

typedef enum sir_regime {
  SIR_REGIME_WHITE = 0,
  SIR_REGIME_BLUE = 1,
  SIR_REGIME_GREEN = 2,
  SIR_REGIME_RED = 3,
  SIR_REGIME_ORANGE = 4
} sir_regime;

typedef enum sir_scan_parameter {
  SIR_PARAM_EPSILON = 0,
  SIR_PARAM_PHI = 1
} sir_scan_parameter;

/* Per-point initial condition policy for 1D scans. The continuation modes
 * seed each point with the settled state of the previous one (branch
 * tracking); they force sequential evaluation. */
typedef enum sir_continuation {
  SIR_CONT_NONE = 0,
  SIR_CONT_ASCENDING = 1,
  SIR_CONT_DESCENDING = 2
} sir_continuation;

/* Model parameters; time unit is years throughout. */
typedef struct sir_params {
  double sigma;   /* birth rate */
  double mu;      /* natural death rate */
  double gamma;   /* recovery rate */
  double beta0;   /* mean contact rate */
  double epsilon; /* degree of seasonality, [0, 1] */
  int shape;      /* sir_forcing_shape */
  double v0;      /* mean vaccination level */
  double alpha;   /* vaccination perturbation amplitude, [0, v0] */
  double r;       /* vaccination/contact frequency ratio */
  double phi;     /* phase difference, [0, 2*pi] */
} sir_params;

typedef struct sir_integ_config {
  double rel_tol;
  double abs_tol;
  double max_step;
  double min_step;
  double transient;      /* years discarded before sampling */
  double sample_window;  /* years of annual samples */
} sir_integ_config;

typedef struct sir_lyap_config {
  double total_time;      /* years of tangent accumulation */
  double renorm_interval; /* years between renormalizations */
  double transient;       /* years discarded before accumulation */
  int block_count;        /* blocks for the standard-error estimate */
  uint64_t seed;          /* seeds the initial tangent direction(s) */
} sir_lyap_config;

typedef struct sir_lyap_estimate {
  double lambda1;     /* 1/year, natural-log base */
  double std_error;
  int converged;      /* 0 when std_error > 0.02 */
  int has_spectrum;
  double spectrum[3]; /* sorted descending when has_spectrum */
} sir_lyap_estimate;

const char* sir_version(void);
const char* sir_status_message(int status);

/* Baseline defaults: the chaotic regime under a constant vaccination
 * strategy (alpha = 0). */
void sir_params_default(sir_params* p);
void sir_integ_config_default(sir_integ_config* cfg);
void sir_lyap_config_default(sir_lyap_config* cfg);

/* Returns SIR_OK or SIR_ERR_INVALID; on failure writes the violated
 * invariant into msg (truncated to msg_len, always NUL-terminated). */
int sir_params_validate(const sir_params* p, char* msg, size_t msg_len);

/* --- model ------------------------------------------------------------- */

double sir_kot_shape(double theta);
double sir_contact_rate(double t, const sir_params* p);
double sir_vaccination_rate(double t, const sir_params* p);
int sir_vector_field(double t, const double y[3], const sir_params* p,
                     double dy[3]);
/* jac is row-major: jac[3*i + j] = d f_i / d y_j. */
int sir_jacobian(double t, const double y[3], const sir_params* p,
                 double jac[9]);
double sir_basic_reproduction_number(const sir_params* p);
/* Equilibria of the constant-rate skeleton (requires epsilon = 0 and
 * v0 = alpha = 0). *ee_physical is 0 when R0 < 1 leaves the EE with I < 0. */
int sir_equilibria(const sir_params* p, double dfe[3], double ee[3],
                   int* ee_physical);

/* --- integration ------------------------------------------------------- */

typedef struct sir_trajectory sir_trajectory;

int sir_integrate(const sir_params* p, const sir_integ_config* cfg,
                  const double y0[3], double t0, double t1,
                  double sample_every, sir_trajectory** out);
/* Twin trajectories from y0 and y0 + (delta, 0, -delta). */
int sir_divergence_demo(const sir_params* p, const sir_integ_config* cfg,
                        const double y0[3], double delta, double duration,
                        double sample_every, sir_trajectory** out_a,
                        sir_trajectory** out_b);
size_t sir_trajectory_size(const sir_trajectory* t);
double sir_trajectory_time(const sir_trajectory* t, size_t index);
int sir_trajectory_state(const sir_trajectory* t, size_t index, double y[3]);
void sir_trajectory_free(sir_trajectory* t);

typedef struct sir_strobe sir_strobe;

/* Annual samples after cfg->transient, floor(cfg->sample_window) of them. */
int sir_strobe_sample(const sir_params* p, const sir_integ_config* cfg,
                      const double y0[3], sir_strobe** out);
size_t sir_strobe_size(const sir_strobe* s);
int sir_strobe_state(const sir_strobe* s, size_t index, double y[3]);
/* Distinct (S, I) pairs at the given resolution. */
int sir_strobe_distinct(const sir_strobe* s, double tol);
void sir_strobe_free(sir_strobe* s);

/* --- Lyapunov exponents ------------------------------------------------ */

int sir_largest_exponent(const sir_params* p, const sir_integ_config* integ,
                         const sir_lyap_config* cfg, const double y0[3],
                         sir_lyap_estimate* out);
int sir_exponent_spectrum(const sir_params* p, const sir_integ_config* integ,
                          const sir_lyap_config* cfg, const double y0[3],
                          sir_lyap_estimate* out);

/* --- parameter sweeps --------------------------------------------------- */

typedef struct sir_scan sir_scan;

typedef struct sir_scan_spec {
  int parameter; /* sir_scan_parameter */
  double lo;
  double hi;
  int points;
  int with_strobe;
  int with_lyapunov;
  int continuation; /* sir_continuation */
  int workers;      /* <= 0 uses all hardware threads */
  double y0[3];
  sir_params params;
  sir_integ_config integ;
  sir_lyap_config lyap;
} sir_scan_spec;

int sir_scan_run(const sir_scan_spec* spec, sir_scan** out);
size_t sir_scan_point_count(const sir_scan* s);
double sir_scan_parameter_value(const sir_scan* s, size_t point);
/* SIR_OK, or the integration failure recorded for that point. */
int sir_scan_point_status(const sir_scan* s, size_t point);
double sir_scan_lambda1(const sir_scan* s, size_t point);
double sir_scan_std_error(const sir_scan* s, size_t point);
size_t sir_scan_strobe_size(const sir_scan* s, size_t point);
int sir_scan_strobe_state(const sir_scan* s, size_t point, size_t index,
                          double y[3]);
void sir_scan_free(sir_scan* s);

typedef struct sir_grid sir_grid;

typedef struct sir_grid_spec {
  double phi_lo;
  double phi_hi;
  double alpha_lo;
  double alpha_hi;
  int phi_points;
  int alpha_points;
  double lambda_tol; /* white/blue boundary */
  int workers;
  double y0[3];
  sir_params params;
  sir_integ_config integ;
  sir_lyap_config lyap;
} sir_grid_spec;

typedef struct sir_density_cell {
  double phi;
  double alpha;
  double lambda1;
  int bin;    /* sir_regime */
  int status; /* SIR_OK or the per-cell failure */
} sir_density_cell;

int sir_grid_run(const sir_grid_spec* spec, sir_grid** out);
size_t sir_grid_cell_count(const sir_grid* g);
int sir_grid_cell(const sir_grid* g, size_t index, sir_density_cell* out);
void sir_grid_free(sir_grid* g);

int sir_classify_regime(double lambda1, double lambda_tol);
const char* sir_regime_name(int regime);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* SIRCHAOS_H */
