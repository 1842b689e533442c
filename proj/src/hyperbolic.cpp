#include "subdamp/hyperbolic.hpp"

#include <cmath>
#include <stdexcept>

#include "subdamp/analysis.hpp"
#include "subdamp/damping.hpp"

namespace subdamp {

double rusanov_flux(const FluxModel& flux, double u_left, double u_right) {
  const double speed = std::max(std::abs(eval_flux_derivative(flux, u_left)),
                                std::abs(eval_flux_derivative(flux, u_right)));
  return 0.5 * (eval_flux(flux, u_left) + eval_flux(flux, u_right)) -
         0.5 * speed * (u_right - u_left);
}

void hyperbolic_step(RealField& field, const FluxModel& flux, double dt,
                     bool enforce_cfl) {
  if (field.grid.topology != Topology::periodic)
    throw std::invalid_argument("hyperbolic_step: periodic topology required");
  if (!(dt > 0.0)) throw std::invalid_argument("hyperbolic_step: dt must be > 0");
  const std::size_t n = field.values.size();
  const double dx = field.grid.spacing();
  if (enforce_cfl) {
    const double smax = max_wave_speed(flux, field.values);
    if (dt * smax / dx > kCflMax * (1.0 + 1e-12))
      throw std::runtime_error(
          "cfl-violation: dt * max|f'| / dx = " +
          std::to_string(dt * smax / dx) + " exceeds " + std::to_string(kCflMax));
  }
  // Interface fluxes: iface[j] sits between cells j-1 and j (periodic wrap).
  std::vector<double> iface(n);
  iface[0] = rusanov_flux(flux, field.values[n - 1], field.values[0]);
  for (std::size_t j = 1; j < n; ++j)
    iface[j] = rusanov_flux(flux, field.values[j - 1], field.values[j]);
  const double lambda = dt / dx;
  for (std::size_t j = 0; j + 1 < n; ++j)
    field.values[j] -= lambda * (iface[j + 1] - iface[j]);
  field.values[n - 1] -= lambda * (iface[0] - iface[n - 1]);
  field.time += dt;
}

void advect(RealField& field, const FluxModel& flux, double dt,
            const RunConfig& cfg) {
  if (dt <= 0.0) return;
  if (cfg.advection_substep > 0.0) {
    const long long n_sub =
        std::max(1ll, std::llround(dt / cfg.advection_substep));
    const double dt_sub = dt / static_cast<double>(n_sub);
    for (long long i = 0; i < n_sub; ++i)
      hyperbolic_step(field, flux, dt_sub, cfg.cfl == CflPolicy::enforce);
    return;
  }
  if (cfg.cfl == CflPolicy::fixed) {
    hyperbolic_step(field, flux, dt, false);
    return;
  }
  // enforce: split dt into Courant-bounded sub-steps, re-measuring the wave
  // speed as the state evolves.
  double remaining = dt;
  while (remaining > 1e-15 * dt) {
    const double smax = max_wave_speed(flux, field.values);
    const double dx = field.grid.spacing();
    double dt_sub = remaining;
    if (smax > 0.0) dt_sub = std::min(remaining, kCflMax * dx / smax);
    hyperbolic_step(field, flux, dt_sub, false);
    remaining -= dt_sub;
  }
}

SolverState make_solver_state(const RunConfig& cfg) {
  SolverState st;
  st.field = initial_field(cfg);
  st.step = 0;
  st.cfg = cfg;
  st.flux = cfg.flux();
  return st;
}

void strang_step(SolverState& state) {
  const double dt = state.cfg.dt;
  if (state.cfg.splitting == SplitOrder::aba) {
    advect(state.field, state.flux, 0.5 * dt, state.cfg);
    damping_flow(state.field, state.cfg.damping, dt);
    advect(state.field, state.flux, 0.5 * dt, state.cfg);
  } else {
    damping_flow(state.field, state.cfg.damping, 0.5 * dt);
    advect(state.field, state.flux, dt, state.cfg);
    damping_flow(state.field, state.cfg.damping, 0.5 * dt);
  }
  ++state.step;
  // Pin the timestamp to n * dt: sub-flows accumulate roundoff otherwise.
  state.field.time = static_cast<double>(state.step) * dt;
}

std::size_t cell_left_of(const Grid1D& grid, double x) {
  const long long n = static_cast<long long>(grid.n_cells);
  const long long iface = std::llround((x - grid.origin) / grid.spacing());
  return static_cast<std::size_t>(((iface - 1) % n + n) % n);
}

std::size_t cell_right_of(const Grid1D& grid, double x) {
  const long long n = static_cast<long long>(grid.n_cells);
  const long long iface = std::llround((x - grid.origin) / grid.spacing());
  return static_cast<std::size_t>((iface % n + n) % n);
}

namespace {

struct TracePoints {
  std::size_t left_of_start;
  std::size_t right_of_end;
};

TracePoints trace_points(const Grid1D& grid, const DampingProfile& damping) {
  double start = grid.origin;
  double end = grid.origin;
  if (!damping.everywhere && damping.intervals.size() == 1) {
    start = damping.intervals[0].first;
    end = start + damping.intervals[0].second;
  }
  return {cell_left_of(grid, start), cell_right_of(grid, end)};
}

}  // namespace

RunRecord run_conservation(const RunConfig& cfg) {
  if (cfg.model != Model::conservation)
    throw std::invalid_argument("run_conservation: model must be conservation");
  validate_config(cfg);

  SolverState st = make_solver_state(cfg);
  const long long steps = cfg.n_steps();
  const long long series_stride =
      cfg.series_every <= 0.0
          ? 1
          : std::max(1ll, std::llround(cfg.series_every / cfg.dt));
  const long long snap_stride =
      cfg.snapshot_every <= 0.0
          ? 0
          : std::max(1ll, std::llround(cfg.snapshot_every / cfg.dt));

  RunRecord record;
  record.config = cfg;
  const double dx = st.field.grid.spacing();
  const TracePoints tp = trace_points(st.field.grid, cfg.damping);

  auto sample_series = [&]() {
    const double t = st.field.time;
    double l1 = 0.0;
    for (double v : st.field.values) l1 += std::abs(v);
    auto push = [&](const char* name, double v) {
      record.series[name].t.push_back(t);
      record.series[name].v.push_back(v);
    };
    push("sup_norm", sup_norm(st.field));
    push("l1_norm", l1 * dx);
    push("zero_gap", zero_interval_measure(st.field, cfg.damping));
    push("trace_x0", st.field.values[tp.left_of_start]);
    push("trace_xA", st.field.values[tp.right_of_end]);
  };

  sample_series();
  record.snapshots.push_back(st.field);
  for (long long n = 1; n <= steps; ++n) {
    strang_step(st);
    if (n % series_stride == 0 || n == steps) sample_series();
    if ((snap_stride > 0 && n % snap_stride == 0) || n == steps)
      record.snapshots.push_back(st.field);
  }
  return record;
}

}  // namespace subdamp
