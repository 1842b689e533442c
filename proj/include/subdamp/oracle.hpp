#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "subdamp/flux.hpp"
#include "subdamp/snapshot.hpp"

namespace subdamp {

/** Inputs for the semi-analytic solution of the constant-datum problem
 *
 *   d_t u + d_x f(u) + delta 1_(0,A) u/|u|^alpha = 0,  u(0) = K on a torus
 *   of length L,
 *
 * with convex flux, f'(0) = 0.  Everything the oracle computes is independent
 * of the PDE solver and is used as ground truth against it.
 */
struct OracleInput {
  FluxModel flux;
  double K = 1.25;
  double delta = 1.0;
  double A = 0.25;
  double alpha = 1.0;
  double L = 1.0;
};

/** Check admissibility: K, delta > 0, 0 < A < L, alpha in (0,1], f'(0) = 0,
 * and inf f'' > 0 on [-K, K] (analytic f'' minimized on a 10^4 lattice).
 * Throws std::invalid_argument naming the failed condition.
 */
void validate_oracle_input(const OracleInput& in);

/** The damping-zone transit map
 *
 *   g(v) = integral_0^{v^alpha/(delta alpha)} f'((v^alpha - delta alpha tau)^{1/alpha}) dtau
 *        = (1/delta) integral_0^v f'(s) s^{alpha-1} ds,
 *
 * the distance a characteristic entering the zone with value v travels before
 * its value dies.  Strictly increasing, g(0) = 0.  Absolute error <= 1e-10.
 */
double g_integral(const OracleInput& in, double v);

/** Inverse of g on [0, K] by bisection (tolerance 1e-12). Requires
 * 0 <= y <= g(K). */
double g_inverse(const OracleInput& in, double y);

/** Threshold value epsilon solving g(epsilon) = A: entry values above it
 * cross the damping zone alive, values at or below it die inside.  Returns
 * nullopt when g(K) < A (damping dominates: nothing survives the crossing).
 */
std::optional<double> epsilon_threshold(const OracleInput& in);

/** Time for an entry value u_n > epsilon to cross the zone (partial integral
 * reaching A).  At u_n = epsilon returns the full extinction duration
 * u_n^alpha/(delta alpha); below epsilon throws std::runtime_error
 * ("no-crossing").
 */
double crossing_time(const OracleInput& in, double u_n);

/** Value remaining when an entry value w exits the zone (g(v) = g(w) - A). */
double exit_value(const OracleInput& in, double w);

/** The crossing recursion: u_0 = K at t_0 = 0; each cycle crosses the zone
 * (duration s_n, exit value v_n at time tau_n = t_n + s_n) and travels the
 * undamped arc of length L - A at speed f'(v_n), returning to the zone
 * entrance at t_{n+1} with u_{n+1} = v_n; stops at the first n0 with
 * u_{n0} <= epsilon.
 */
struct OracleSequences {
  std::vector<double> u;    // entry values, u[0] = K (size n0 + 1)
  std::vector<double> t;    // entry times, t[0] = 0  (size n0 + 1)
  std::vector<double> v;    // exit values              (size n0)
  std::vector<double> tau;  // exit times               (size n0)
  std::size_t n0 = 0;
  double c0 = 0.0;          // max contraction ratio u_{n+1}/u_n < 1
  double T_star_seq = 0.0;  // t[n0]
  double t_star_seq = 0.0;  // T_star_seq + eps^alpha/(delta alpha)
};
OracleSequences iterate_sequences(const OracleInput& in);

/** Arrival time theta(w) at the zone entrance of the trace value w < K:
 * the first time the inflow trace u(t, 0) equals w.  Computed by chaining
 * entry values backward through g until the chain leaves [0, K], resolving
 * the start against characteristics seeded inside the zone at t = 0, then
 * accumulating crossing and travel times forward.
 */
double trace_arrival_time(const OracleInput& in, double w);

/** T_star in the trace sense: first time the inflow trace drops to epsilon
 * (equals trace_arrival_time(epsilon)). */
double T_star_trace(const OracleInput& in);

struct CurvePoint {
  double t = 0.0;
  double x = 0.0;
};

/** Curve delimiting the zero set: a trace value w entering at time t0 dies at
 * time t0 + w^alpha/(delta alpha) at position g(w).  Input here is a measured
 * inflow-trace series; samples with value above epsilon are skipped.  Throws
 * std::runtime_error on an empty usable trace.
 */
std::vector<CurvePoint> extinction_curve(const Series& inflow_trace,
                                         const OracleInput& in);

/** Semi-analytic samples of the same curve from the oracle alone: trace
 * values w descending geometrically from epsilon to epsilon * w_min_frac. */
std::vector<CurvePoint> oracle_curve(const OracleInput& in,
                                     std::size_t n_samples = 64,
                                     double w_min_frac = 1e-4);

/** Slope bounds beta_minus = inf f'(s)/s, beta_plus = sup f'(s)/s on (0, K]
 * (10^4 lattice plus the s->0 limit f''(0)), and the late-time envelopes
 * anchored at t_star:
 *   sup_bound(t)      = 1/(beta_minus (t - t_star - eps^alpha/(delta alpha)))
 *   zero_gap_bound(t) = beta_plus/(2 delta alpha beta_minus^{1+alpha})
 *                        * (t - t_star)^{-(1+alpha)}
 * The member functions return +infinity for t at or below their validity
 * onset.
 */
struct Envelopes {
  double beta_minus = 0.0;
  double beta_plus = 0.0;
  double eps = 0.0;
  double t_star = 0.0;
  double delta = 0.0;
  double alpha = 1.0;

  double extinction_lag() const;  // eps^alpha / (delta alpha)
  double sup_bound(double t) const;
  double zero_gap_bound(double t) const;
};
Envelopes make_envelopes(const OracleInput& in);

/** Both envelope values at a time t; throws std::domain_error when t is not
 * strictly past t_star + eps^alpha/(delta alpha). */
std::pair<double, double> decay_envelopes(const OracleInput& in, double t);

struct OracleReport {
  OracleInput input;
  bool crossing = false;  // g(K) >= A
  double gK = 0.0;
  std::optional<double> eps;
  OracleSequences seq;                       // valid when crossing
  double T_star_from_trace = 0.0;            // valid when crossing
  double t_star_from_trace = 0.0;
  Envelopes envelopes;                       // anchored at t_star_from_trace
  std::vector<CurvePoint> curve;
};

OracleReport build_oracle_report(const OracleInput& in);

/** Key=value rendering of the report (text-file format of the CLI). */
std::string format_oracle_report(const OracleReport& report);

/** Build an OracleInput from a conservation config (single damping window
 * anchored at the domain origin, constant datum). */
OracleInput oracle_input_from_config(const RunConfig& cfg);

}  // namespace subdamp
