#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"
#include "subdamp/characteristics.hpp"
#include "subdamp/config.hpp"
#include "subdamp/flux.hpp"
#include "subdamp/grid.hpp"
#include "subdamp/hyperbolic.hpp"
#include "subdamp/snapshot.hpp"

using namespace subdamp;

namespace {

RunConfig tiny_config() {
  return parse_config(
      "model = conservation\n"
      "grid.n = 64\n"
      "grid.origin = 0\n"
      "grid.length = 1\n"
      "flux = burgers\n"
      "damping.delta = 1\n"
      "damping.alpha = 1\n"
      "damping.omega = 0,0.25\n"
      "dt = 1e-3\n"
      "t_final = 0.05\n"
      "u0 = constant\n"
      "u0.value = 1.25\n"
      "snapshot.every = 5e-3\n");
}

}  // namespace

TEST_CASE("characteristic speed is the flux derivative at the sampled value") {
  const Grid1D g = make_grid(32);
  const FluxModel burgers = parse_flux("burgers", 1.0, 0.25);

  RealField constant{g, 0.0, std::vector<double>(32, 1.25)};
  std::vector<double> pos{0.1, 0.6};
  advance_characteristics(pos, constant, burgers, 0.01);
  CHECK(pos[0] == doctest::Approx(0.1 + 1.25 * 0.01).epsilon(1e-12));
  CHECK(pos[1] == doctest::Approx(0.6 + 1.25 * 0.01).epsilon(1e-12));

  RealField zero{g, 0.0, std::vector<double>(32, 0.0)};
  std::vector<double> still{0.3};
  advance_characteristics(still, zero, burgers, 0.5);
  CHECK(still[0] == doctest::Approx(0.3).epsilon(1e-12));

  // Linear transport moves every seed at speed c regardless of the field.
  const FluxModel lin = parse_flux("linear", 2.0, 0.25);
  RealField bumpy{g, 0.0, std::vector<double>(32, 0.0)};
  for (std::size_t j = 0; j < 32; ++j) bumpy.values[j] = std::sin(0.2 * j);
  std::vector<double> ride{0.2, 0.7};
  advance_characteristics(ride, bumpy, lin, 0.05);
  CHECK(ride[0] == doctest::Approx(0.3).epsilon(1e-12));
  CHECK(ride[1] == doctest::Approx(0.8).epsilon(1e-12));
}

TEST_CASE("positions wrap around the periodic seam") {
  const Grid1D g = make_grid(32);
  const FluxModel lin = parse_flux("linear", 1.0, 0.25);
  RealField f{g, 0.0, std::vector<double>(32, 0.0)};
  std::vector<double> pos{0.95};
  advance_characteristics(pos, f, lin, 0.1);
  CHECK(pos[0] == doctest::Approx(0.05).epsilon(1e-12));
}

TEST_CASE("bundle tracing through a recorded run") {
  const RunConfig cfg = tiny_config();
  const RunRecord rec = run_conservation(cfg);
  REQUIRE(rec.snapshots.size() >= 3);

  const std::vector<double> seeds{0.3, 0.5, 0.7};
  const CharacteristicBundle bundle = trace_bundle(rec, seeds);
  REQUIRE(bundle.paths.size() == 3);
  for (const auto& path : bundle.paths) {
    CHECK(path.t.front() == 0.0);
    CHECK(path.t.back() == doctest::Approx(0.05).epsilon(1e-9));
    CHECK(path.x.size() == path.t.size());
  }
  // Outside the damping window the constant state rides at speed 1.25.
  const auto& mid = bundle.paths[1];
  CHECK(mid.seed == 0.5);
  CHECK(mid.x.back() == doctest::Approx(0.5 + 1.25 * 0.05).epsilon(1e-6));

  CHECK(paths_stay_ordered(bundle));

  const std::string csv = bundle_to_csv(bundle);
  CHECK(csv.rfind("seed_id,t,x", 0) == 0);
  CHECK(csv.find("\n0,") != std::string::npos);
  CHECK(csv.find("\n2,") != std::string::npos);
}

TEST_CASE("tracing can start mid-record") {
  const RunConfig cfg = tiny_config();
  const RunRecord rec = run_conservation(cfg);
  const CharacteristicBundle bundle = trace_bundle(rec, {0.5}, 0.012);
  REQUIRE(bundle.paths.size() == 1);
  // First snapshot at or after 0.012 sits at 0.015.
  CHECK(bundle.paths[0].t.front() == doctest::Approx(0.015).epsilon(1e-9));
  CHECK(bundle.paths[0].x.front() == 0.5);

  // A start time after all snapshots leaves fewer than two frames.
  CHECK_THROWS_WITH_AS((void)trace_bundle(rec, {0.5}, 1.0),
                       doctest::Contains("fewer than two snapshots"),
                       std::runtime_error);
}

TEST_CASE("sparse snapshot cadence is rejected") {
  RunConfig cfg = tiny_config();
  cfg.snapshot_every = 0.025;  // 25 steps apart: too stale to freeze fields
  const RunRecord rec = run_conservation(cfg);
  CHECK_THROWS_WITH_AS((void)trace_bundle(rec, {0.5}),
                       doctest::Contains("sparse-record"), std::runtime_error);
}

TEST_CASE("ordering detector notices a crossing") {
  CharacteristicBundle bundle;
  bundle.origin = 0.0;
  bundle.length = 1.0;
  CharacteristicPath a;
  a.seed = 0.2;
  a.t = {0.0, 1.0};
  a.x = {0.2, 0.4};
  CharacteristicPath b;
  b.seed = 0.3;
  b.t = {0.0, 1.0};
  b.x = {0.3, 0.45};
  bundle.paths = {a, b};
  CHECK(paths_stay_ordered(bundle));
  bundle.paths[1].x[1] = 0.41;  // narrowly ahead: still ordered
  CHECK(paths_stay_ordered(bundle));
  bundle.paths[1].x[1] = 0.35;  // b fell behind a: crossing
  CHECK(!paths_stay_ordered(bundle));
}
