#pragma once

#include <optional>
#include <string>
#include <vector>

#include "subdamp/config.hpp"
#include "subdamp/damping.hpp"
#include "subdamp/flux.hpp"
#include "subdamp/grid.hpp"
#include "subdamp/snapshot.hpp"

namespace subdamp {

/** First time the series drops below threshold and stays below through the
 * record's end; nullopt if it never does (or ends above). */
std::optional<double> detect_extinction(const Series& sup_norm,
                                        double threshold = 1e-12);

/** Active-set width minus the measure (cell count x dx) of the largest run of
 * exactly-zero cells inside each damping interval (summed over intervals;
 * the whole domain when the profile is everywhere).  Zero cells are bit-zero:
 * the damping flow clamps exactly. */
double zero_interval_measure(const RealField& field,
                             const DampingProfile& profile);

/** Least-squares slope of log(value) against log(t) over [t0, t1].
 * Throws std::runtime_error on nonpositive values or an empty window. */
double fit_algebraic_rate(const Series& series, double t0, double t1);

/** Least-squares slope of ln(value) against t over [t0, t1]. */
double fit_exponential_rate(const Series& series, double t0, double t1);

/** Pointwise comparison of two runs expected to satisfy lower <= upper:
 * per-snapshot max of (lower_j - upper_j)_+ and its overall max.
 * Requires matching grids and snapshot times. */
struct ComparisonReport {
  double max_violation = 0.0;
  std::vector<double> per_snapshot;
};
ComparisonReport check_comparison(const RunRecord& lower,
                                  const RunRecord& upper);

/** Feedback-damping scenario: for a flux with a uniform transport speed
 * (inf |f'| > 0 on [-K, K]), the everywhere-active damping strength
 * delta = K^alpha inf|f'| / (alpha gamma L) extinguishes any |u0| <= K by
 * deadline (1 + gamma) L / inf|f'|.  Runs the conservation solver with
 * u0 = K constant and verifies the detected extinction time against the
 * deadline (+ 2 dt).  Throws std::runtime_error when f'(0) = 0 (no uniform
 * speed). */
struct ControlReport {
  double inf_speed = 0.0;
  double delta = 0.0;
  double deadline = 0.0;
  std::optional<double> extinction_time;
  bool pass = false;
};
ControlReport control_scenario(const FluxModel& flux, double K, double gamma,
                               double domain_length, double alpha = 1.0,
                               double dt = 1e-3, std::size_t n_cells = 400);

/** Linear interpolation of a series at time t (throws outside the range). */
double series_value_at(const Series& series, double t);

/** First time the series value is <= level (linear interpolation between
 * samples); nullopt if never. */
std::optional<double> first_time_below(const Series& series, double level);

/** True when cell values with centers inside (a, b) are nondecreasing in x
 * up to tol. */
bool monotone_nondecreasing_on(const RealField& field, double a, double b,
                               double tol = 1e-12);

/** Named checks over a record directory for the analyze subcommand.
 * Returns "name = value" lines plus "name.pass = 0|1" verdicts.
 *
 * Known checks:
 *  - extinction           sup-norm reaches zero and stays there
 *  - sup_rate             log-log slope of the sup-norm on the late half
 *  - exp_rate             semilog slope of the sup-norm on the late half
 *  - zero_gap_final       last value of the zero-gap series
 *  - monotone             snapshots nondecreasing between window end and the
 *                         right edge of the domain, skipping a five-cell
 *                         smearing layer at each end (single-window runs)
 *  - velocity_extinction  sup of |velocity| over the damping window drops
 *                         below 1e-6 and stays there (wave runs)
 *  - freeze               last two snapshots agree to 1e-8 in sup norm
 *  - energy_decay         wave energy never increases and ends below 1% of
 *                         its initial value
 *  - mass_conserved       relative L2-mass drift within 1e-10 per 10^3 steps
 *  - mass_decay           final mass on the damping support below 1e-6 of
 *                         the initial total mass */
std::string analyze_record(const RunRecord& record,
                           const std::vector<std::string>& checks);

}  // namespace subdamp
