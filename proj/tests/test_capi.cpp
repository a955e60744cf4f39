#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstring>
#include <string>

#include "sirchaos.h"

namespace {

sir_params defaults() {
  sir_params p;
  sir_params_default(&p);
  return p;
}

sir_integ_config integ_defaults() {
  sir_integ_config c;
  sir_integ_config_default(&c);
  return c;
}

sir_lyap_config lyap_defaults() {
  sir_lyap_config c;
  sir_lyap_config_default(&c);
  return c;
}

const double kIc[3] = {0.06, 0.001, 0.939};

}  // namespace

TEST_CASE("defaults are the baseline configuration and validate clean") {
  const sir_params p = defaults();
  CHECK(p.sigma == 0.01);
  CHECK(p.mu == 0.01);
  CHECK(p.gamma == 50.0);
  CHECK(p.beta0 == 1505.0);
  CHECK(p.epsilon == 0.138);
  CHECK(p.shape == SIR_SHAPE_KOT);
  CHECK(p.v0 == 0.071);
  CHECK(p.alpha == 0.0);
  CHECK(p.r == 2.0);
  CHECK(p.phi == 0.0);

  char msg[128];
  CHECK(sir_params_validate(&p, msg, sizeof(msg)) == SIR_OK);
  CHECK(msg[0] == '\0');
}

TEST_CASE("validation reports the violated invariant") {
  sir_params p = defaults();
  p.alpha = 0.2;  // exceeds v0
  char msg[128];
  CHECK(sir_params_validate(&p, msg, sizeof(msg)) == SIR_ERR_INVALID);
  CHECK(std::string(msg).find("alpha") != std::string::npos);
  CHECK(sir_params_validate(nullptr, msg, sizeof(msg)) == SIR_ERR_INVALID);
}

TEST_CASE("model evaluations through the C surface") {
  const sir_params p = defaults();
  CHECK(sir_kot_shape(0.0) == doctest::Approx(1.0));
  CHECK(sir_contact_rate(0.0, &p) == doctest::Approx(1712.69));
  CHECK(sir_vaccination_rate(0.3, &p) == doctest::Approx(0.071));

  double dy[3];
  CHECK(sir_vector_field(0.0, kIc, &p, dy) == SIR_OK);
  const double beta = sir_contact_rate(0.0, &p);
  CHECK(dy[1] == doctest::Approx(beta * 0.06 * 0.001 - 50.01 * 0.001));

  double jac[9];
  CHECK(sir_jacobian(0.0, kIc, &p, jac) == SIR_OK);
  CHECK(jac[2] == 0.0);  // dS'/dR
  CHECK(jac[5] == 0.0);  // dI'/dR
  CHECK(jac[4] == doctest::Approx(beta * 0.06 - 50.01));
  CHECK(sir_vector_field(0.0, nullptr, &p, dy) == SIR_ERR_INVALID);
}

TEST_CASE("reproduction number and equilibria") {
  sir_params p = defaults();
  CHECK(sir_basic_reproduction_number(&p) ==
        doctest::Approx(30.0939812).epsilon(1e-6));

  p.epsilon = 0.0;
  p.v0 = 0.0;
  p.alpha = 0.0;
  double dfe[3], ee[3];
  int physical = 0;
  REQUIRE(sir_equilibria(&p, dfe, ee, &physical) == SIR_OK);
  CHECK(dfe[0] == doctest::Approx(1.0));
  CHECK(ee[0] == doctest::Approx(0.033229).epsilon(1e-4));
  CHECK(ee[1] == doctest::Approx(1.9332e-4).epsilon(1e-4));
  CHECK(physical == 1);

  // forced configuration is rejected
  p.epsilon = 0.1;
  CHECK(sir_equilibria(&p, dfe, ee, &physical) == SIR_ERR_INVALID);
}

TEST_CASE("trajectory handle lifecycle") {
  const sir_params p = defaults();
  const sir_integ_config cfg = integ_defaults();
  sir_trajectory* traj = nullptr;
  REQUIRE(sir_integrate(&p, &cfg, kIc, 0.0, 2.0, 0.5, &traj) == SIR_OK);
  REQUIRE(traj != nullptr);
  CHECK(sir_trajectory_size(traj) == 5);
  CHECK(sir_trajectory_time(traj, 0) == 0.0);
  double y[3];
  CHECK(sir_trajectory_state(traj, 4, y) == SIR_OK);
  CHECK(y[0] + y[1] + y[2] == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(sir_trajectory_state(traj, 5, y) == SIR_ERR_RANGE);
  sir_trajectory_free(traj);
  sir_trajectory_free(nullptr);  // must be a no-op

  // invalid sampling cadence surfaces as SIR_ERR_INVALID
  traj = nullptr;
  CHECK(sir_integrate(&p, &cfg, kIc, 0.0, 2.0, 0.0, &traj) == SIR_ERR_INVALID);
  CHECK(traj == nullptr);
}

TEST_CASE("divergence demo produces twin handles") {
  const sir_params p = defaults();
  const sir_integ_config cfg = integ_defaults();
  sir_trajectory* a = nullptr;
  sir_trajectory* b = nullptr;
  REQUIRE(sir_divergence_demo(&p, &cfg, kIc, 1e-6, 1.0, 0.5, &a, &b) ==
          SIR_OK);
  CHECK(sir_trajectory_size(a) == sir_trajectory_size(b));
  double ya[3], yb[3];
  sir_trajectory_state(a, 0, ya);
  sir_trajectory_state(b, 0, yb);
  CHECK(yb[0] - ya[0] == doctest::Approx(1e-6));
  sir_trajectory_free(a);
  sir_trajectory_free(b);
}

TEST_CASE("strobe handle and distinct counting") {
  const sir_params p = defaults();
  sir_integ_config cfg = integ_defaults();
  cfg.transient = 50.0;
  cfg.sample_window = 12.0;
  sir_strobe* strobe = nullptr;
  REQUIRE(sir_strobe_sample(&p, &cfg, kIc, &strobe) == SIR_OK);
  CHECK(sir_strobe_size(strobe) == 12);
  double y[3];
  CHECK(sir_strobe_state(strobe, 0, y) == SIR_OK);
  CHECK(sir_strobe_state(strobe, 12, y) == SIR_ERR_RANGE);
  CHECK(sir_strobe_distinct(strobe, 1e-6) >= 1);
  sir_strobe_free(strobe);
}

TEST_CASE("lyapunov estimates through the C surface") {
  const sir_params p = defaults();
  const sir_integ_config integ = integ_defaults();
  sir_lyap_config lyap = lyap_defaults();
  lyap.total_time = 200.0;
  lyap.transient = 50.0;

  sir_lyap_estimate est{};
  REQUIRE(sir_largest_exponent(&p, &integ, &lyap, kIc, &est) == SIR_OK);
  CHECK(std::isfinite(est.lambda1));
  CHECK(est.std_error >= 0.0);
  CHECK(est.has_spectrum == 0);

  REQUIRE(sir_exponent_spectrum(&p, &integ, &lyap, kIc, &est) == SIR_OK);
  CHECK(est.has_spectrum == 1);
  CHECK(est.spectrum[0] == est.lambda1);
  CHECK(est.spectrum[0] >= est.spectrum[1]);
  CHECK(est.spectrum[1] >= est.spectrum[2]);

  lyap.renorm_interval = 0.0;
  CHECK(sir_largest_exponent(&p, &integ, &lyap, kIc, &est) ==
        SIR_ERR_INVALID);
}

TEST_CASE("scan handle exposes rows in parameter order") {
  sir_scan_spec spec{};
  spec.parameter = SIR_PARAM_EPSILON;
  spec.lo = 0.0;
  spec.hi = 0.02;
  spec.points = 3;
  spec.with_strobe = 1;
  spec.with_lyapunov = 1;
  spec.continuation = SIR_CONT_NONE;
  spec.workers = 2;
  std::memcpy(spec.y0, kIc, sizeof(kIc));
  spec.params = defaults();
  spec.integ = integ_defaults();
  spec.integ.transient = 30.0;
  spec.integ.sample_window = 5.0;
  spec.lyap = lyap_defaults();
  spec.lyap.total_time = 80.0;
  spec.lyap.transient = 10.0;

  sir_scan* scan = nullptr;
  REQUIRE(sir_scan_run(&spec, &scan) == SIR_OK);
  REQUIRE(sir_scan_point_count(scan) == 3);
  CHECK(sir_scan_parameter_value(scan, 0) == 0.0);
  CHECK(sir_scan_parameter_value(scan, 2) == 0.02);
  for (size_t k = 0; k < 3; ++k) {
    CHECK(sir_scan_point_status(scan, k) == SIR_OK);
    CHECK(std::isfinite(sir_scan_lambda1(scan, k)));
    CHECK(sir_scan_strobe_size(scan, k) == 5);
    double y[3];
    CHECK(sir_scan_strobe_state(scan, k, 0, y) == SIR_OK);
    CHECK(sir_scan_strobe_state(scan, k, 9, y) == SIR_ERR_RANGE);
  }
  sir_scan_free(scan);

  spec.points = 1;  // invariant: points >= 2
  CHECK(sir_scan_run(&spec, &scan) == SIR_ERR_INVALID);
}

TEST_CASE("grid handle with regime bins") {
  sir_grid_spec spec{};
  spec.phi_lo = 0.0;
  spec.phi_hi = 3.14159265358979323846;
  spec.alpha_lo = 0.002;
  spec.alpha_hi = 0.004;
  spec.phi_points = 2;
  spec.alpha_points = 2;
  spec.lambda_tol = 0.001;
  spec.workers = 2;
  std::memcpy(spec.y0, kIc, sizeof(kIc));
  spec.params = defaults();
  spec.integ = integ_defaults();
  spec.integ.transient = 20.0;
  spec.lyap = lyap_defaults();
  spec.lyap.total_time = 60.0;
  spec.lyap.transient = 10.0;

  sir_grid* grid = nullptr;
  REQUIRE(sir_grid_run(&spec, &grid) == SIR_OK);
  REQUIRE(sir_grid_cell_count(grid) == 4);
  sir_density_cell cell{};
  REQUIRE(sir_grid_cell(grid, 0, &cell) == SIR_OK);
  CHECK(cell.phi == 0.0);
  CHECK(cell.alpha == 0.002);
  CHECK(cell.status == SIR_OK);
  CHECK(cell.bin == sir_classify_regime(cell.lambda1, spec.lambda_tol));
  CHECK(sir_grid_cell(grid, 4, &cell) == SIR_ERR_RANGE);
  sir_grid_free(grid);
}

TEST_CASE("classification and naming") {
  CHECK(sir_classify_regime(-0.5, 0.001) == SIR_REGIME_WHITE);
  CHECK(sir_classify_regime(0.003, 0.001) == SIR_REGIME_BLUE);
  CHECK(sir_classify_regime(0.007, 0.001) == SIR_REGIME_GREEN);
  CHECK(sir_classify_regime(0.012, 0.001) == SIR_REGIME_RED);
  CHECK(sir_classify_regime(0.05, 0.001) == SIR_REGIME_ORANGE);
  CHECK(std::string(sir_regime_name(SIR_REGIME_ORANGE)) == "orange");
  CHECK(std::string(sir_regime_name(SIR_REGIME_WHITE)) == "white");
}

TEST_CASE("version and status messages") {
  CHECK(std::string(sir_version()) == "0.1.0");
  for (int s = 0; s <= 5; ++s)
    CHECK(std::strlen(sir_status_message(s)) > 0);
}
