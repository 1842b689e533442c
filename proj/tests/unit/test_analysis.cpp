#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"
#include "subdamp/analysis.hpp"
#include "subdamp/config.hpp"
#include "subdamp/damping.hpp"
#include "subdamp/flux.hpp"
#include "subdamp/grid.hpp"
#include "subdamp/snapshot.hpp"

using namespace subdamp;

namespace {

Series make_series(std::vector<double> t, std::vector<double> v) {
  Series s;
  s.t = std::move(t);
  s.v = std::move(v);
  return s;
}

RunConfig analysis_config() {
  return parse_config(
      "model = conservation\n"
      "grid.n = 100\n"
      "grid.origin = 0\n"
      "grid.length = 1\n"
      "flux = burgers\n"
      "damping.delta = 1\n"
      "damping.alpha = 1\n"
      "damping.omega = 0,0.25\n"
      "dt = 1e-3\n"
      "t_final = 10\n"
      "u0 = constant\n"
      "u0.value = 1.25\n");
}

bool has_line(const std::string& text, const std::string& line) {
  return text.find(line + "\n") != std::string::npos ||
         (text.size() >= line.size() &&
          text.compare(text.size() - line.size(), line.size(), line) == 0);
}

double line_value(const std::string& text, const std::string& key) {
  const std::string prefix = key + " = ";
  const std::size_t at = text.find(prefix);
  REQUIRE(at != std::string::npos);
  return std::stod(text.substr(at + prefix.size()));
}

}  // namespace

TEST_CASE("extinction detection edge cases") {
  CHECK_THROWS_AS(
      (void)detect_extinction(make_series({0.0}, {1.0}), 0.0),
      std::invalid_argument);
  CHECK_THROWS_AS(
      (void)detect_extinction(make_series({0.0}, {1.0}), -1.0),
      std::invalid_argument);
  // Empty series: nothing to detect.
  CHECK(!detect_extinction(make_series({}, {})).has_value());
  // Never above the threshold: extinct from the first sample.
  const auto t0 = detect_extinction(make_series({2.0, 3.0}, {0.0, 0.0}));
  REQUIRE(t0.has_value());
  CHECK(*t0 == 2.0);
  // Still above at the end: not extinct.
  CHECK(!detect_extinction(make_series({0.0, 1.0}, {1.0, 0.5})).has_value());
  // Dips below but comes back: only the final crossing counts.
  const auto t1 = detect_extinction(
      make_series({0.0, 1.0, 2.0, 3.0, 4.0}, {1.0, 0.0, 0.3, 0.0, 0.0}));
  REQUIRE(t1.has_value());
  CHECK(*t1 == 3.0);
  // Custom threshold.
  const auto t2 = detect_extinction(
      make_series({0.0, 1.0, 2.0}, {1.0, 1e-7, 1e-8}), 1e-6);
  REQUIRE(t2.has_value());
  CHECK(*t2 == 1.0);
}

TEST_CASE("zero-gap measures the uncovered part of each window") {
  const Grid1D g = make_grid(8);  // centers 0.0625 + j/8, dx = 0.125
  RealField f{g, 0.0, std::vector<double>(8, 1.0)};
  const DampingProfile win = make_damping_window(1.0, 1.0, 0.0, 0.5);
  // No zero cells: the gap is the whole window.
  CHECK(zero_interval_measure(f, win) == doctest::Approx(0.5).epsilon(1e-14));
  // A run of two zero cells covers 0.25 of the window.
  f.values[1] = 0.0;
  f.values[2] = 0.0;
  CHECK(zero_interval_measure(f, win) == doctest::Approx(0.25).epsilon(1e-14));
  // Separated runs do not add up: only the largest counts.
  f.values[2] = 1.0;
  f.values[3] = 0.0;
  CHECK(zero_interval_measure(f, win) ==
        doctest::Approx(0.5 - 0.125).epsilon(1e-14));
  // Window fully covered: the gap clamps at zero.
  f.values[0] = f.values[1] = f.values[2] = f.values[3] = 0.0;
  CHECK(zero_interval_measure(f, win) == doctest::Approx(0.0).epsilon(1e-14));
  // Values must be exactly zero to count.
  f.values[1] = 1e-300;
  CHECK(zero_interval_measure(f, win) > 0.0);

  // Everywhere-active profile: the window is the whole domain.
  RealField h{g, 0.0, std::vector<double>(8, 1.0)};
  h.values[4] = 0.0;
  h.values[5] = 0.0;
  h.values[6] = 0.0;
  CHECK(zero_interval_measure(h, make_damping_everywhere(1.0, 1.0)) ==
        doctest::Approx(1.0 - 3.0 * 0.125).epsilon(1e-14));

  // Two windows sum their gaps.
  const DampingProfile two =
      make_damping_windows(1.0, 1.0, {{0.0, 0.25}, {0.5, 0.25}});
  RealField k{g, 0.0, std::vector<double>(8, 1.0)};
  k.values[0] = 0.0;  // covers 0.125 of the first window
  CHECK(zero_interval_measure(k, two) ==
        doctest::Approx((0.25 - 0.125) + 0.25).epsilon(1e-14));
}

TEST_CASE("rate fits recover synthetic slopes") {
  std::vector<double> t, alg, expo;
  for (int i = 0; i <= 50; ++i) {
    const double ti = 5.0 + 0.1 * i;
    t.push_back(ti);
    alg.push_back(3.0 * std::pow(ti, -2.0));
    expo.push_back(7.0 * std::exp(-3.0 * ti));
  }
  CHECK(fit_algebraic_rate(make_series(t, alg), 5.0, 10.0) ==
        doctest::Approx(-2.0).epsilon(1e-6));
  CHECK(fit_exponential_rate(make_series(t, expo), 5.0, 10.0) ==
        doctest::Approx(-3.0).epsilon(1e-6));
  // Nonpositive values poison the log.
  CHECK_THROWS_AS(
      (void)fit_algebraic_rate(make_series({5.0, 6.0}, {1.0, 0.0}), 5.0, 6.0),
      std::runtime_error);
  // Fewer than two samples in the window.
  CHECK_THROWS_AS(
      (void)fit_algebraic_rate(make_series(t, alg), 20.0, 30.0),
      std::runtime_error);
  // Bad window.
  CHECK_THROWS_AS((void)fit_algebraic_rate(make_series(t, alg), 6.0, 5.0),
                  std::invalid_argument);
}

TEST_CASE("series interpolation and first crossing") {
  const Series s = make_series({0.0, 1.0, 2.0}, {4.0, 2.0, 2.0});
  CHECK(series_value_at(s, 0.0) == 4.0);
  CHECK(series_value_at(s, 0.5) == doctest::Approx(3.0).epsilon(1e-14));
  CHECK(series_value_at(s, 2.0) == 2.0);
  CHECK_THROWS_AS((void)series_value_at(s, -1.0), std::invalid_argument);
  CHECK_THROWS_AS((void)series_value_at(s, 3.0), std::invalid_argument);

  const auto hit = first_time_below(s, 3.0);
  REQUIRE(hit.has_value());
  CHECK(*hit == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(!first_time_below(s, 1.0).has_value());
  const auto at_start = first_time_below(s, 5.0);
  REQUIRE(at_start.has_value());
  CHECK(*at_start == 0.0);
}

TEST_CASE("pointwise comparison of two records") {
  RunConfig cfg = analysis_config();
  const Grid1D g = cfg.grid();
  auto record_with = [&](double level) {
    RunRecord r;
    r.config = cfg;
    r.snapshots.push_back(
        RealField{g, 0.0, std::vector<double>(cfg.grid_n, level)});
    r.snapshots.push_back(
        RealField{g, 1.0, std::vector<double>(cfg.grid_n, level)});
    return r;
  };
  RunRecord lower = record_with(1.0);
  RunRecord upper = record_with(2.0);
  const ComparisonReport ok = check_comparison(lower, upper);
  CHECK(ok.max_violation == 0.0);
  REQUIRE(ok.per_snapshot.size() == 2);

  lower.snapshots[1].values[7] = 2.3;  // pokes above the upper run
  const ComparisonReport bad = check_comparison(lower, upper);
  CHECK(bad.max_violation == doctest::Approx(0.3).epsilon(1e-12));
  CHECK(bad.per_snapshot[0] == 0.0);
  CHECK(bad.per_snapshot[1] == doctest::Approx(0.3).epsilon(1e-12));

  RunRecord short_rec = record_with(1.0);
  short_rec.snapshots.pop_back();
  CHECK_THROWS_AS((void)check_comparison(short_rec, upper),
                  std::invalid_argument);
  RunRecord late = record_with(1.0);
  late.snapshots[1].time = 1.5;
  CHECK_THROWS_AS((void)check_comparison(late, upper), std::invalid_argument);
}

TEST_CASE("monotone window test ignores values outside the interval") {
  const Grid1D g = make_grid(10);  // centers 0.05, 0.15, ..., 0.95
  RealField f{g, 0.0, {9.0, 1.0, 2.0, 3.0, 4.0, 5.0, 6.0, 7.0, 8.0, 0.0}};
  // Full domain has drops at both ends.
  CHECK(!monotone_nondecreasing_on(f, 0.0, 1.0));
  // Restricting to (0.1, 0.9) excludes both offending cells.
  CHECK(monotone_nondecreasing_on(f, 0.1, 0.9));
  // Tolerance absorbs tiny dips.
  RealField h{g, 0.0, {1.0, 1.0, 1.0 - 1e-13, 1.0, 1.0, 1.0, 1.0, 1.0, 1.0, 1.0}};
  CHECK(monotone_nondecreasing_on(h, 0.0, 1.0));
  CHECK(!monotone_nondecreasing_on(h, 0.0, 1.0, 1e-15));
}

TEST_CASE("feedback scenario sizes the damping from the transport speed") {
  const FluxModel lin = parse_flux("linear", 2.0, 0.25);
  const ControlReport rep = control_scenario(lin, 1.25, 0.5, 1.0);
  CHECK(rep.inf_speed == doctest::Approx(2.0).epsilon(1e-12));
  // delta = K inf|f'| / (gamma L), deadline = (1 + gamma) L / inf|f'|.
  CHECK(rep.delta == doctest::Approx(5.0).epsilon(1e-12));
  CHECK(rep.deadline == doctest::Approx(0.75).epsilon(1e-12));
  REQUIRE(rep.extinction_time.has_value());
  // Uniform damping at delta = 5 kills the constant 1.25 at t = 0.25.
  CHECK(*rep.extinction_time == doctest::Approx(0.25).epsilon(0.05));
  CHECK(rep.pass);

  // A flux with stalling characteristics has no uniform speed to use.
  const FluxModel burgers = parse_flux("burgers", 1.0, 0.25);
  CHECK_THROWS_WITH_AS((void)control_scenario(burgers, 1.25, 0.5, 1.0),
                       doctest::Contains("no uniform transport speed"),
                       std::runtime_error);
}

TEST_CASE("analyze: extinction and zero-gap lines") {
  RunRecord rec;
  rec.config = analysis_config();
  rec.series["sup_norm"] =
      make_series({0.0, 1.0, 2.0, 3.0}, {1.0, 0.5, 0.0, 0.0});
  rec.series["zero_gap"] =
      make_series({0.0, 1.0, 2.0, 3.0}, {0.25, 0.1, 0.01, 0.0025});
  const std::string out =
      analyze_record(rec, {"extinction", "zero_gap_final"});
  CHECK(has_line(out, "extinction.time = 2"));
  CHECK(has_line(out, "extinction.pass = 1"));
  CHECK(has_line(out, "zero_gap_final.value = 0.0025000000000000001"));

  rec.series["sup_norm"].v = {1.0, 0.5, 0.3, 0.2};  // never extinct
  const std::string bad = analyze_record(rec, {"extinction"});
  CHECK(has_line(bad, "extinction.time = none"));
  CHECK(has_line(bad, "extinction.pass = 0"));
}

TEST_CASE("analyze: rate slopes use the late half of the run") {
  RunRecord rec;
  rec.config = analysis_config();  // t_final = 10
  std::vector<double> t, v;
  for (int i = 0; i <= 100; ++i) {
    const double ti = 0.1 * i;
    t.push_back(ti);
    // Early garbage, clean power law after t = 5 (the fitted window).
    v.push_back(ti < 5.0 ? 17.0 : std::pow(ti, -1.5));
  }
  rec.series["sup_norm"] = make_series(t, v);
  const std::string out = analyze_record(rec, {"sup_rate"});
  CHECK(line_value(out, "sup_rate.slope") ==
        doctest::Approx(-1.5).epsilon(1e-9));

  for (std::size_t i = 0; i < t.size(); ++i)
    v[i] = t[i] < 5.0 ? 17.0 : std::exp(-0.25 * t[i]);
  rec.series["sup_norm"] = make_series(t, v);
  const std::string expo = analyze_record(rec, {"exp_rate"});
  CHECK(line_value(expo, "exp_rate.slope") ==
        doctest::Approx(-0.25).epsilon(1e-9));
}

TEST_CASE("analyze: monotone trims the smearing layers") {
  RunRecord rec;
  rec.config = analysis_config();  // window (0, 0.25), 100 cells
  const Grid1D g = rec.config.grid();
  RealField f{g, 0.0, std::vector<double>(100, 0.0)};
  for (std::size_t j = 0; j < 100; ++j) f.values[j] = g.coord(j);
  // A dip inside the five-cell margin after the window end is forgiven.
  f.values[27] = 0.0;  // x = 0.275 < 0.25 + 0.05
  rec.snapshots.push_back(f);
  CHECK(has_line(analyze_record(rec, {"monotone"}), "monotone.pass = 1"));

  // A dip in the interior is a real violation.
  rec.snapshots[0].values[60] = 0.0;
  CHECK(has_line(analyze_record(rec, {"monotone"}), "monotone.pass = 0"));

  rec.snapshots.clear();
  CHECK_THROWS_AS((void)analyze_record(rec, {"monotone"}),
                  std::runtime_error);
}

TEST_CASE("analyze: velocity extinction and freeze") {
  RunRecord rec;
  rec.config = analysis_config();
  rec.series["sup_v_omega"] =
      make_series({0.0, 1.0, 2.0, 3.0}, {1.0, 1e-3, 1e-7, 1e-9});
  const Grid1D g = rec.config.grid();
  rec.snapshots.push_back(RealField{g, 2.0, std::vector<double>(100, 0.5)});
  rec.snapshots.push_back(RealField{g, 3.0, std::vector<double>(100, 0.5)});
  const std::string out = analyze_record(rec, {"velocity_extinction", "freeze"});
  CHECK(has_line(out, "velocity_extinction.time = 2"));
  CHECK(has_line(out, "velocity_extinction.pass = 1"));
  CHECK(has_line(out, "freeze.drift = 0"));
  CHECK(has_line(out, "freeze.pass = 1"));

  rec.series["sup_v_omega"].v = {1.0, 1e-3, 1e-4, 1e-5};  // still moving
  rec.snapshots[1].values[10] = 0.5 + 1e-3;               // still drifting
  const std::string bad = analyze_record(rec, {"velocity_extinction", "freeze"});
  CHECK(has_line(bad, "velocity_extinction.pass = 0"));
  CHECK(has_line(bad, "freeze.pass = 0"));

  rec.snapshots.pop_back();
  CHECK_THROWS_AS((void)analyze_record(rec, {"freeze"}), std::runtime_error);
}

TEST_CASE("analyze: energy decay wants monotone loss below one percent") {
  RunRecord rec;
  rec.config = analysis_config();
  rec.series["energy"] =
      make_series({0.0, 1.0, 2.0}, {1.0, 0.5, 0.009});
  const std::string out = analyze_record(rec, {"energy_decay"});
  CHECK(has_line(out, "energy_decay.ratio = 0.0089999999999999993"));
  CHECK(has_line(out, "energy_decay.pass = 1"));

  rec.series["energy"].v = {1.0, 1.2, 0.005};  // transient gain
  CHECK(has_line(analyze_record(rec, {"energy_decay"}),
                 "energy_decay.pass = 0"));
  rec.series["energy"].v = {1.0, 0.5, 0.02};  // not enough decay
  CHECK(has_line(analyze_record(rec, {"energy_decay"}),
                 "energy_decay.pass = 0"));
}

TEST_CASE("analyze: mass conservation and mass decay") {
  RunRecord rec;
  rec.config = analysis_config();  // 10^4 steps: tolerance scales to 1e-9
  rec.series["mass"] = make_series({0.0, 10.0}, {2.0, 2.0 * (1.0 + 1e-11)});
  rec.series["mass_on_support"] = make_series({0.0, 10.0}, {1.0, 1e-6});
  const std::string out =
      analyze_record(rec, {"mass_conserved", "mass_decay"});
  CHECK(has_line(out, "mass_conserved.pass = 1"));
  // Ratio 1e-6/2 = 5e-7 sits below the 1e-6 requirement.
  CHECK(has_line(out, "mass_decay.ratio = 4.9999999999999998e-07"));
  CHECK(has_line(out, "mass_decay.pass = 1"));

  rec.series["mass"].v = {2.0, 2.1};
  CHECK(has_line(analyze_record(rec, {"mass_conserved"}),
                 "mass_conserved.pass = 0"));
  rec.series["mass"].v = {2.0, 2.0};
  rec.series["mass_on_support"].v = {1.0, 1e-5};
  CHECK(has_line(analyze_record(rec, {"mass_decay"}), "mass_decay.pass = 0"));
}

TEST_CASE("analyze: unknown checks are rejected") {
  RunRecord rec;
  rec.config = analysis_config();
  CHECK_THROWS_WITH_AS((void)analyze_record(rec, {"navier_stokes"}),
                       doctest::Contains("unknown check"),
                       std::invalid_argument);
}
