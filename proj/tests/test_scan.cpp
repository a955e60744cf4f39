#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstring>

#include "core/scan.hpp"

using namespace sirchaos;

namespace {

constexpr double kPi = 3.14159265358979323846;

// small and fast; the dynamics itself is irrelevant to most scan contracts
ScanSpec1D tiny_spec() {
  ScanSpec1D spec;
  spec.lo = 0.0;
  spec.hi = 0.02;
  spec.points = 4;
  spec.integ.transient = 40.0;
  spec.integ.sample_window = 6.0;
  spec.lyap.total_time = 100.0;
  spec.lyap.renorm_interval = 0.5;
  spec.lyap.transient = 20.0;
  return spec;
}

bool rows_equal(const ScanRow& a, const ScanRow& b) {
  if (a.param != b.param || a.lambda1 != b.lambda1 ||
      a.std_error != b.std_error || a.failed != b.failed)
    return false;
  if (a.strobe.size() != b.strobe.size()) return false;
  for (std::size_t k = 0; k < a.strobe.size(); ++k)
    if (std::memcmp(&a.strobe[k], &b.strobe[k], sizeof(StateVec)) != 0)
      return false;
  return true;
}

}  // namespace

TEST_CASE("regime bins partition the line at the documented boundaries") {
  CHECK(classify_regime(-0.02) == Regime::kWhite);
  CHECK(classify_regime(0.001) == Regime::kWhite);
  CHECK(classify_regime(0.0011) == Regime::kBlue);
  CHECK(classify_regime(0.003) == Regime::kBlue);
  CHECK(classify_regime(0.005) == Regime::kBlue);
  CHECK(classify_regime(0.0051) == Regime::kGreen);
  CHECK(classify_regime(0.01) == Regime::kGreen);
  CHECK(classify_regime(0.012) == Regime::kRed);
  CHECK(classify_regime(0.015) == Regime::kRed);
  CHECK(classify_regime(0.02) == Regime::kOrange);

  // total over a broad sample
  for (int k = -1000; k <= 1000; ++k) {
    const Regime r = classify_regime(k * 1e-3);
    CHECK(std::strlen(regime_name(r)) > 0);
  }
}

TEST_CASE("custom white/blue boundary") {
  CHECK(classify_regime(0.002, 0.003) == Regime::kWhite);
  CHECK(classify_regime(0.004, 0.003) == Regime::kBlue);
}

TEST_CASE("linspace includes the endpoints and refines monotonically") {
  CHECK(linspace_value(0.3, 0.9, 7, 0) == 0.3);
  CHECK(linspace_value(0.3, 0.9, 7, 6) == 0.9);
  // doubling the resolution re-produces the coarse nodes bit-exactly
  for (int i = 0; i < 7; ++i)
    CHECK(linspace_value(0.3, 0.9, 7, i) ==
          linspace_value(0.3, 0.9, 13, 2 * i));
}

TEST_CASE("count_distinct clusters at the given resolution") {
  std::vector<StateVec> pts = {{0.1, 0.2, 0.7},
                               {0.1 + 5e-7, 0.2, 0.7},
                               {0.1, 0.2 + 5e-7, 0.7},
                               {0.2, 0.2, 0.6}};
  CHECK(count_distinct(pts, 1e-6) == 2);
  CHECK(count_distinct(pts, 1e-8) == 4);
  CHECK(count_distinct({}, 1e-6) == 0);
}

TEST_CASE("scan rows are ordered with one record per point") {
  const auto result = bifurcation_scan(tiny_spec(), false, 0);
  REQUIRE(result.rows.size() == 4);
  for (std::size_t k = 0; k < result.rows.size(); ++k) {
    CHECK(result.rows[k].param ==
          linspace_value(0.0, 0.02, 4, static_cast<int>(k)));
    CHECK_FALSE(result.rows[k].failed);
    CHECK(result.rows[k].strobe.size() == 6);
    CHECK_FALSE(result.rows[k].has_lyapunov);
  }
}

TEST_CASE("degenerate two-point scan in the quiet regime") {
  ScanSpec1D spec = tiny_spec();
  spec.lo = 0.0;
  spec.hi = 1e-9;
  spec.points = 2;
  spec.integ.transient = 600.0;
  const auto result = bifurcation_scan(spec, false, 0);
  REQUIRE(result.rows.size() == 2);
  for (const auto& row : result.rows)
    CHECK(count_distinct(row.strobe, 1e-6) == 1);
  CHECK(std::abs(result.rows[0].strobe[0].s - result.rows[1].strobe[0].s) <
        1e-6);
  CHECK(std::abs(result.rows[0].strobe[0].i - result.rows[1].strobe[0].i) <
        1e-6);
}

TEST_CASE("parallel and serial scans are identical") {
  ScanSpec1D spec = tiny_spec();
  const auto serial = bifurcation_scan(spec, true, 1);
  const auto parallel = bifurcation_scan(spec, true, 4);
  const auto again = bifurcation_scan(spec, true, 4);
  REQUIRE(serial.rows.size() == parallel.rows.size());
  for (std::size_t k = 0; k < serial.rows.size(); ++k) {
    CHECK(rows_equal(serial.rows[k], parallel.rows[k]));
    CHECK(rows_equal(serial.rows[k], again.rows[k]));
  }
}

TEST_CASE("lyapunov scan fills the exponent fields") {
  const auto result = lyapunov_scan_1d(tiny_spec(), 0);
  for (const auto& row : result.rows) {
    CHECK(row.has_lyapunov);
    CHECK(std::isfinite(row.lambda1));
    CHECK(row.std_error >= 0.0);
    CHECK(row.strobe.empty());
  }
}

TEST_CASE("lambda is 2*pi periodic in phi") {
  ScanSpec1D spec;
  spec.parameter = ScanParameter::kPhi;
  spec.lo = 0.0;
  spec.hi = kTwoPi;
  spec.points = 2;
  spec.base.vaccination.alpha = 0.009;
  spec.lyap.total_time = 1500.0;
  const auto result = lyapunov_scan_1d(spec, 0);
  REQUIRE(result.rows.size() == 2);
  const auto& a = result.rows.front();
  const auto& b = result.rows.back();
  CHECK(std::abs(a.lambda1 - b.lambda1) <=
        3.0 * (a.std_error + b.std_error));
}

TEST_CASE("per-point integration failures are recorded and the scan continues") {
  ScanSpec1D spec = tiny_spec();
  spec.integ.rel_tol = 1e-30;  // unattainable: forces step-size underflow
  spec.integ.abs_tol = 1e-30;
  spec.integ.min_step = 1e-5;
  const auto result = bifurcation_scan(spec, true, 0);
  REQUIRE(result.rows.size() == 4);
  for (const auto& row : result.rows) {
    CHECK(row.failed);
    CHECK_FALSE(row.error.empty());
  }
}

TEST_CASE("scan specification invariants") {
  ScanSpec1D spec = tiny_spec();
  spec.lo = 0.5;
  spec.hi = 0.1;
  CHECK_THROWS_AS(bifurcation_scan(spec, false, 0), ValidationError);

  spec = tiny_spec();
  spec.points = 1;
  CHECK_THROWS_AS(bifurcation_scan(spec, false, 0), ValidationError);

  spec = tiny_spec();
  spec.hi = 1.5;  // epsilon out of [0, 1]
  CHECK_THROWS_AS(bifurcation_scan(spec, false, 0), ValidationError);

  spec = tiny_spec();
  spec.parameter = ScanParameter::kPhi;
  spec.lo = -1.0;
  CHECK_THROWS_AS(bifurcation_scan(spec, false, 0), ValidationError);
}

TEST_CASE("continuation carries the attractor state between points") {
  ScanSpec1D spec = tiny_spec();
  spec.continuation = Continuation::kDescending;
  const auto a = bifurcation_scan(spec, false, 0);
  const auto b = bifurcation_scan(spec, false, 0);
  REQUIRE(a.rows.size() == 4);
  for (std::size_t k = 0; k < a.rows.size(); ++k) {
    CHECK(a.rows[k].param == linspace_value(0.0, 0.02, 4, static_cast<int>(k)));
    CHECK(rows_equal(a.rows[k], b.rows[k]));  // deterministic
  }
  // ascending and no-continuation runs start each point differently, so the
  // descending run must differ from the fixed-IC run somewhere at full
  // precision (they share only the first-evaluated point's seed)
  const auto fixed = bifurcation_scan(tiny_spec(), false, 0);
  bool any_difference = false;
  for (std::size_t k = 0; k < a.rows.size(); ++k)
    if (!rows_equal(a.rows[k], fixed.rows[k])) any_difference = true;
  CHECK(any_difference);
}

TEST_CASE("density grid layout, determinism and classification consistency") {
  GridSpec2D spec;
  spec.phi_lo = 0.0;
  spec.phi_hi = kPi;
  spec.alpha_lo = 0.002;
  spec.alpha_hi = 0.006;
  spec.phi_points = 3;
  spec.alpha_points = 2;
  spec.integ.transient = 20.0;
  spec.lyap.total_time = 60.0;
  spec.lyap.renorm_interval = 0.5;
  spec.lyap.transient = 10.0;

  const auto cells = density_grid(spec, 0);
  REQUIRE(cells.size() == 6);
  // alpha-major layout with endpoint-inclusive axes
  CHECK(cells[0].phi == 0.0);
  CHECK(cells[0].alpha == 0.002);
  CHECK(cells[2].phi == kPi);
  CHECK(cells[3].alpha == 0.006);
  for (const auto& c : cells) {
    CHECK_FALSE(c.failed);
    CHECK(c.bin == classify_regime(c.lambda1, spec.lambda_tol));
  }

  const auto serial = density_grid(spec, 1);
  for (std::size_t k = 0; k < cells.size(); ++k) {
    CHECK(cells[k].lambda1 == serial[k].lambda1);
    CHECK(cells[k].bin == serial[k].bin);
  }
}

TEST_CASE("grid refinement re-evaluates shared nodes identically") {
  GridSpec2D coarse;
  coarse.phi_lo = 1.0;
  coarse.phi_hi = 2.0;
  coarse.alpha_lo = 0.003;
  coarse.alpha_hi = 0.005;
  coarse.phi_points = 3;
  coarse.alpha_points = 2;
  coarse.integ.transient = 20.0;
  coarse.lyap.total_time = 60.0;
  coarse.lyap.renorm_interval = 0.5;
  coarse.lyap.transient = 10.0;

  GridSpec2D fine = coarse;
  fine.phi_points = 5;

  const auto a = density_grid(coarse, 0);
  const auto b = density_grid(fine, 0);
  for (int ai = 0; ai < 2; ++ai)
    for (int pi = 0; pi < 3; ++pi) {
      const auto& ca = a[static_cast<std::size_t>(ai * 3 + pi)];
      const auto& cb = b[static_cast<std::size_t>(ai * 5 + 2 * pi)];
      CHECK(ca.phi == cb.phi);
      CHECK(ca.alpha == cb.alpha);
      CHECK(ca.lambda1 == cb.lambda1);
      CHECK(ca.bin == cb.bin);
    }
}

TEST_CASE("grid specification invariants") {
  GridSpec2D spec;
  spec.phi_points = 0;
  CHECK_THROWS_AS(density_grid(spec, 0), ValidationError);
  spec = GridSpec2D{};
  spec.alpha_lo = 0.01;
  spec.alpha_hi = 0.001;
  CHECK_THROWS_AS(density_grid(spec, 0), ValidationError);
  spec = GridSpec2D{};
  spec.lambda_tol = 0.01;  // would overlap the blue bin
  CHECK_THROWS_AS(density_grid(spec, 0), ValidationError);
}
