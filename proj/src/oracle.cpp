#include "subdamp/oracle.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "subdamp/numerics.hpp"

namespace subdamp {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Comparisons of g-values near a boundary (g(w) = A, or a chain landing on
// g(K)) sit on the quadrature noise floor (~1e-11); this margin separates an
// exact-tie within noise from a genuinely interior value.
constexpr double kGBoundaryTol = 1e-9;

/** Duration for a zone value to decay from w down to v (closed form). */
double decay_duration(const OracleInput& in, double w, double v) {
  return (std::pow(w, in.alpha) - std::pow(v, in.alpha)) /
         (in.delta * in.alpha);
}

double travel_time(const OracleInput& in, double v) {
  const double speed = eval_flux_derivative(in.flux, v);
  if (!(speed > 0.0)) return kInf;
  return (in.L - in.A) / speed;
}

}  // namespace

void validate_oracle_input(const OracleInput& in) {
  if (!(in.K > 0.0)) throw std::invalid_argument("oracle: K must be positive");
  if (!(in.delta > 0.0))
    throw std::invalid_argument("oracle: delta must be positive");
  if (!(in.A > 0.0 && in.A < in.L))
    throw std::invalid_argument("oracle: A must lie in (0, L)");
  if (!(in.alpha > 0.0 && in.alpha <= 1.0))
    throw std::invalid_argument("oracle: alpha must lie in (0, 1]");
  if (std::abs(eval_flux_derivative(in.flux, 0.0)) > 1e-12)
    throw std::invalid_argument("oracle: flux must satisfy f'(0) = 0");
  // Uniform convexity on [-K, K], analytic f'' minimized on a lattice.
  const std::size_t n = 10000;
  double fpp_min = kInf;
  for (std::size_t i = 0; i <= n; ++i) {
    const double s = -in.K + 2.0 * in.K * static_cast<double>(i) /
                                 static_cast<double>(n);
    fpp_min = std::min(fpp_min, eval_flux_second_derivative(in.flux, s));
  }
  if (!(fpp_min > 0.0))
    throw std::invalid_argument(
        "oracle: flux is not uniformly convex on [-K, K] (min f'' = " +
        format_g17(fpp_min) + ")");
}

double g_integral(const OracleInput& in, double v) {
  if (v < 0.0 || v > in.K * (1.0 + 1e-12))
    throw std::invalid_argument("g_integral: v must lie in [0, K]");
  if (v == 0.0) return 0.0;
  // Substituting s = (v^alpha - delta alpha tau)^{1/alpha} turns the transit
  // integral into (1/delta) * int_0^v f'(s) s^{alpha-1} ds.  The integrand is
  // continuous (f'(s) ~ f''(0) s kills the s^{alpha-1} singularity).
  const double am1 = in.alpha - 1.0;
  auto integrand = [&](double s) {
    if (s <= 0.0) return 0.0;
    return eval_flux_derivative(in.flux, s) * std::pow(s, am1);
  };
  return integrate_adaptive(integrand, 0.0, v, 1e-11) / in.delta;
}

double g_inverse(const OracleInput& in, double y) {
  if (y < 0.0) throw std::invalid_argument("g_inverse: y must be >= 0");
  if (y == 0.0) return 0.0;
  const double gK = g_integral(in, in.K);
  if (y > gK * (1.0 + 1e-12))
    throw std::invalid_argument("g_inverse: y exceeds g(K)");
  if (y >= gK) return in.K;
  return bisect([&](double v) { return g_integral(in, v) - y; }, 0.0, in.K,
                1e-12);
}

std::optional<double> epsilon_threshold(const OracleInput& in) {
  validate_oracle_input(in);
  if (g_integral(in, in.K) < in.A) return std::nullopt;
  return g_inverse(in, in.A);
}

double exit_value(const OracleInput& in, double w) {
  const double gw = g_integral(in, w);
  if (gw < in.A - kGBoundaryTol)
    throw std::runtime_error(
        "no-crossing: entry value dies inside the damping zone (g(w) < A)");
  return g_inverse(in, std::max(0.0, gw - in.A));
}

double crossing_time(const OracleInput& in, double u_n) {
  const double gw = g_integral(in, u_n);
  if (gw < in.A - kGBoundaryTol)
    throw std::runtime_error(
        "no-crossing: entry value dies inside the damping zone (g(w) < A)");
  if (gw - in.A <= kGBoundaryTol)
    // The entry value dies exactly at the far edge of the zone, so the
    // crossing consumes its whole pointwise lifetime w^alpha/(delta alpha).
    // Going through exit_value here would bisect g at its tangent root and
    // lose ~6 digits.
    return std::pow(u_n, in.alpha) / (in.delta * in.alpha);
  return decay_duration(in, u_n, exit_value(in, u_n));
}

OracleSequences iterate_sequences(const OracleInput& in) {
  const auto eps = epsilon_threshold(in);
  if (!eps)
    throw std::runtime_error(
        "no-crossing: damping dominates (g(K) < A), threshold undefined");
  OracleSequences seq;
  seq.u.push_back(in.K);
  seq.t.push_back(0.0);
  seq.c0 = 0.0;
  const std::size_t max_iter = 100000;
  while (seq.u.back() > *eps) {
    if (seq.u.size() > max_iter)
      throw std::runtime_error("iterate_sequences: iteration cap hit");
    const double u_n = seq.u.back();
    const double t_n = seq.t.back();
    const double v_n = exit_value(in, u_n);
    const double s_n = decay_duration(in, u_n, v_n);
    seq.v.push_back(v_n);
    seq.tau.push_back(t_n + s_n);
    seq.u.push_back(v_n);
    seq.t.push_back(t_n + s_n + travel_time(in, v_n));
    seq.c0 = std::max(seq.c0, v_n / u_n);
    if (!(v_n > 0.0)) break;  // exact hit of the threshold boundary
  }
  seq.n0 = seq.u.size() - 1;
  seq.T_star_seq = seq.t.back();
  seq.t_star_seq =
      seq.T_star_seq + std::pow(*eps, in.alpha) / (in.delta * in.alpha);
  return seq;
}

double trace_arrival_time(const OracleInput& in, double w) {
  if (!(w > 0.0) || w > in.K)
    throw std::invalid_argument("trace_arrival_time: need 0 < w <= K");
  const double gK = g_integral(in, in.K);
  // Chain entry values backward: chain[k+1] enters the zone and exits with
  // value chain[k].
  std::vector<double> chain{w};
  while (g_integral(in, chain.back()) + in.A <= gK)
    chain.push_back(g_inverse(in, g_integral(in, chain.back()) + in.A));
  // The chain head is the earliest ancestor. A head equal to K (the chain
  // walked all the way back to the datum value) is the particle standing at
  // the zone entrance at t = 0, so it contributes no pre-entry transit. An
  // interior head is seeded inside the zone at t = 0 with value K, exits the
  // far edge with value head, and rides the undamped arc before entering.
  // Heads within quadrature noise of K take the earlier, t = 0 resolution:
  // the inflow trace attains such values first via the entrance particle.
  const double head = chain.back();
  double theta = head >= in.K * (1.0 - kGBoundaryTol)
                     ? 0.0
                     : decay_duration(in, in.K, head) + travel_time(in, head);
  // Accumulate forward: cross from chain[k+1] down to chain[k], then travel
  // the undamped arc at speed f'(chain[k]).
  for (std::size_t k = chain.size() - 1; k-- > 0;)
    theta += decay_duration(in, chain[k + 1], chain[k]) +
             travel_time(in, chain[k]);
  return theta;
}

double T_star_trace(const OracleInput& in) {
  const auto eps = epsilon_threshold(in);
  if (!eps)
    throw std::runtime_error(
        "no-crossing: damping dominates (g(K) < A), T_star undefined");
  return trace_arrival_time(in, *eps);
}

std::vector<CurvePoint> extinction_curve(const Series& inflow_trace,
                                         const OracleInput& in) {
  const auto eps = epsilon_threshold(in);
  if (!eps) throw std::runtime_error("no-crossing: curve undefined");
  std::vector<CurvePoint> curve;
  const double lag_scale = 1.0 / (in.delta * in.alpha);
  for (std::size_t i = 0; i < inflow_trace.t.size(); ++i) {
    const double v = inflow_trace.v[i];
    if (v > *eps || v < 0.0) continue;
    CurvePoint p;
    p.t = inflow_trace.t[i] + std::pow(v, in.alpha) * lag_scale;
    p.x = g_integral(in, v);
    curve.push_back(p);
  }
  if (curve.empty())
    throw std::runtime_error("extinction_curve: trace never reaches epsilon");
  return curve;
}

std::vector<CurvePoint> oracle_curve(const OracleInput& in,
                                     std::size_t n_samples, double w_min_frac) {
  const auto eps = epsilon_threshold(in);
  if (!eps) throw std::runtime_error("no-crossing: curve undefined");
  if (n_samples < 2 || !(w_min_frac > 0.0) || w_min_frac >= 1.0)
    throw std::invalid_argument("oracle_curve: bad sampling parameters");
  std::vector<CurvePoint> curve;
  const double ratio = std::pow(w_min_frac, 1.0 / (n_samples - 1.0));
  double w = *eps;
  for (std::size_t i = 0; i < n_samples; ++i, w *= ratio) {
    CurvePoint p;
    p.t = trace_arrival_time(in, w) +
          std::pow(w, in.alpha) / (in.delta * in.alpha);
    p.x = g_integral(in, w);
    curve.push_back(p);
  }
  return curve;
}

double Envelopes::extinction_lag() const {
  return std::pow(eps, alpha) / (delta * alpha);
}

double Envelopes::sup_bound(double t) const {
  const double onset = t_star + extinction_lag();
  if (!(t > onset)) return kInf;
  return 1.0 / (beta_minus * (t - onset));
}

double Envelopes::zero_gap_bound(double t) const {
  if (!(t > t_star)) return kInf;
  return beta_plus / (2.0 * delta * alpha * std::pow(beta_minus, 1.0 + alpha)) *
         std::pow(t - t_star, -(1.0 + alpha));
}

Envelopes make_envelopes(const OracleInput& in) {
  const auto eps = epsilon_threshold(in);
  if (!eps)
    throw std::runtime_error("no-crossing: envelopes undefined");
  Envelopes env;
  env.eps = *eps;
  env.delta = in.delta;
  env.alpha = in.alpha;
  env.t_star = T_star_trace(in) + std::pow(*eps, in.alpha) / (in.delta * in.alpha);
  // beta bounds of f'(s)/s over (0, K]: lattice plus the s -> 0 limit f''(0).
  const std::size_t n = 10000;
  double lo = eval_flux_second_derivative(in.flux, 0.0);
  double hi = lo;
  for (std::size_t i = 1; i <= n; ++i) {
    const double s = in.K * static_cast<double>(i) / static_cast<double>(n);
    const double r = eval_flux_derivative(in.flux, s) / s;
    lo = std::min(lo, r);
    hi = std::max(hi, r);
  }
  env.beta_minus = lo;
  env.beta_plus = hi;
  return env;
}

std::pair<double, double> decay_envelopes(const OracleInput& in, double t) {
  const Envelopes env = make_envelopes(in);
  if (!(t > env.t_star + env.extinction_lag()))
    throw std::domain_error(
        "decay_envelopes: t must exceed t_star + eps^alpha/(delta alpha)");
  return {env.sup_bound(t), env.zero_gap_bound(t)};
}

OracleReport build_oracle_report(const OracleInput& in) {
  validate_oracle_input(in);
  OracleReport rep;
  rep.input = in;
  rep.gK = g_integral(in, in.K);
  rep.crossing = rep.gK >= in.A;
  if (!rep.crossing) return rep;
  rep.eps = epsilon_threshold(in);
  rep.seq = iterate_sequences(in);
  rep.T_star_from_trace = T_star_trace(in);
  rep.t_star_from_trace =
      rep.T_star_from_trace +
      std::pow(*rep.eps, in.alpha) / (in.delta * in.alpha);
  rep.envelopes = make_envelopes(in);
  rep.curve = oracle_curve(in);
  return rep;
}

std::string format_oracle_report(const OracleReport& rep) {
  std::string s;
  auto put = [&s](const std::string& k, const std::string& v) {
    s += k + " = " + v + "\n";
  };
  put("flux", flux_to_string(rep.input.flux));
  put("K", format_g17(rep.input.K));
  put("delta", format_g17(rep.input.delta));
  put("A", format_g17(rep.input.A));
  put("alpha", format_g17(rep.input.alpha));
  put("L", format_g17(rep.input.L));
  put("g_K", format_g17(rep.gK));
  put("regime", rep.crossing ? "crossing" : "damping-dominates-no-crossing");
  if (!rep.crossing) return s;
  put("epsilon", format_g17(*rep.eps));
  put("n0", std::to_string(rep.seq.n0));
  put("c0", format_g17(rep.seq.c0));
  for (std::size_t i = 0; i < rep.seq.u.size(); ++i) {
    put("u_" + std::to_string(i), format_g17(rep.seq.u[i]));
    put("t_" + std::to_string(i), format_g17(rep.seq.t[i]));
  }
  for (std::size_t i = 0; i < rep.seq.v.size(); ++i) {
    put("v_" + std::to_string(i), format_g17(rep.seq.v[i]));
    put("tau_" + std::to_string(i), format_g17(rep.seq.tau[i]));
  }
  put("T_star_seq", format_g17(rep.seq.T_star_seq));
  put("t_star_seq", format_g17(rep.seq.t_star_seq));
  put("T_star_trace", format_g17(rep.T_star_from_trace));
  put("t_star_trace", format_g17(rep.t_star_from_trace));
  put("beta_minus", format_g17(rep.envelopes.beta_minus));
  put("beta_plus", format_g17(rep.envelopes.beta_plus));
  return s;
}

OracleInput oracle_input_from_config(const RunConfig& cfg) {
  OracleInput in;
  in.flux = cfg.flux();
  in.delta = cfg.damping.delta;
  in.alpha = cfg.damping.alpha;
  in.L = cfg.length;
  if (cfg.damping.everywhere || cfg.damping.intervals.size() != 1)
    throw std::invalid_argument(
        "oracle: config must have a single damping window");
  in.A = cfg.damping.intervals[0].second;
  if (cfg.init.kind != InitSpec::Kind::constant)
    throw std::invalid_argument("oracle: config must use a constant datum");
  in.K = cfg.init.value;
  return in;
}

}  // namespace subdamp
