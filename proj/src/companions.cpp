#include "subdamp/companions.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

#include "subdamp/analysis.hpp"
#include "subdamp/hyperbolic.hpp"
#include "subdamp/numerics.hpp"

namespace subdamp {

void viscous_split_step(RealField& field, SpectralWorkspace& ws,
                        const RunConfig& cfg, const FluxModel& flux,
                        double dt) {
  const double t0 = field.time;
  advect(field, flux, 0.5 * dt, cfg);
  diffusion_step(field, ws, cfg.mu, 0.5 * dt);
  damping_flow(field, cfg.damping, dt);
  diffusion_step(field, ws, cfg.mu, 0.5 * dt);
  advect(field, flux, 0.5 * dt, cfg);
  field.time = t0 + dt;
}

RunRecord run_viscous(const RunConfig& cfg) {
  if (cfg.model != Model::viscous)
    throw std::invalid_argument("run_viscous: model must be viscous");
  validate_config(cfg);

  RealField field = initial_field(cfg);
  SpectralWorkspace ws(field.values.size(), cfg.length);
  const FluxModel flux = cfg.flux();

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
  const double dx = field.grid.spacing();

  auto sample_series = [&]() {
    const double t = field.time;
    double l1 = 0.0;
    for (double v : field.values) l1 += std::abs(v);
    auto push = [&](const char* name, double v) {
      record.series[name].t.push_back(t);
      record.series[name].v.push_back(v);
    };
    push("sup_norm", sup_norm(field));
    push("l1_norm", l1 * dx);
    push("zero_gap", zero_interval_measure(field, cfg.damping));
  };

  sample_series();
  record.snapshots.push_back(field);
  for (long long n = 1; n <= steps; ++n) {
    viscous_split_step(field, ws, cfg, flux, cfg.dt);
    field.time = static_cast<double>(n) * cfg.dt;
    if (n % series_stride == 0 || n == steps) sample_series();
    if ((snap_stride > 0 && n % snap_stride == 0) || n == steps)
      record.snapshots.push_back(field);
  }
  return record;
}

WaveState make_wave_state(const RunConfig& cfg) {
  WaveState st;
  st.u = initial_field(cfg);
  st.u.values.front() = 0.0;
  st.u.values.back() = 0.0;
  st.v = RealField{st.u.grid, 0.0,
                   std::vector<double>(st.u.values.size(), 0.0)};
  return st;
}

void newmark_step(WaveState& state, double c, double dt, double theta,
                  double zeta) {
  if (state.u.grid.topology != Topology::dirichlet)
    throw std::invalid_argument("newmark_step: dirichlet grids only");
  if (!(c >= 0.0) || !(dt > 0.0))
    throw std::invalid_argument("newmark_step: need c >= 0 and dt > 0");
  const std::size_t n_nodes = state.u.values.size();
  if (n_nodes < 3) throw std::invalid_argument("newmark_step: grid too small");
  const std::size_t n_int = n_nodes - 2;
  const double dx = state.u.grid.spacing();
  const double c2 = c * c;
  const double r = zeta * c2 * dt * dt / (dx * dx);

  auto second_difference = [&](const std::vector<double>& u) {
    std::vector<double> w(n_nodes, 0.0);
    for (std::size_t j = 1; j + 1 < n_nodes; ++j)
      w[j] = (u[j - 1] - 2.0 * u[j] + u[j + 1]) / (dx * dx);
    return w;
  };

  const std::vector<double> w_old = second_difference(state.u.values);

  std::vector<double> diag(n_int, 1.0 + 2.0 * r);
  std::vector<double> sub(n_int, -r);   // sub[0] unused
  std::vector<double> sup(n_int, -r);   // sup[n_int-1] unused
  std::vector<double> rhs(n_int);
  for (std::size_t j = 1; j + 1 < n_nodes; ++j)
    rhs[j - 1] = state.u.values[j] + dt * state.v.values[j] +
                 dt * dt * (0.5 - zeta) * c2 * w_old[j];

  solve_tridiagonal(sub, diag, sup, rhs);
  for (std::size_t j = 1; j + 1 < n_nodes; ++j)
    state.u.values[j] = rhs[j - 1];
  state.u.values.front() = 0.0;
  state.u.values.back() = 0.0;

  const std::vector<double> w_new = second_difference(state.u.values);
  for (std::size_t j = 1; j + 1 < n_nodes; ++j)
    state.v.values[j] +=
        dt * c2 * ((1.0 - theta) * w_old[j] + theta * w_new[j]);
  state.v.values.front() = 0.0;
  state.v.values.back() = 0.0;

  state.u.time += dt;
  state.v.time += dt;
}

void wave_split_step(WaveState& state, const RunConfig& cfg) {
  damping_flow(state.v, cfg.damping, 0.5 * cfg.dt);
  newmark_step(state, cfg.wave_c, cfg.dt, cfg.wave_theta, cfg.wave_zeta);
  damping_flow(state.v, cfg.damping, 0.5 * cfg.dt);
  ++state.step;
  const double t = static_cast<double>(state.step) * cfg.dt;
  state.u.time = t;
  state.v.time = t;
}

double wave_energy(const WaveState& state, double c) {
  const double dx = state.u.grid.spacing();
  double kinetic = 0.0;
  for (double v : state.v.values) kinetic += v * v;
  kinetic *= dx;
  double elastic = 0.0;
  for (std::size_t j = 0; j + 1 < state.u.values.size(); ++j) {
    const double du = state.u.values[j + 1] - state.u.values[j];
    elastic += du * du;
  }
  elastic *= c * c / dx;
  return kinetic + elastic;
}

RunRecord run_wave(const RunConfig& cfg) {
  if (cfg.model != Model::wave)
    throw std::invalid_argument("run_wave: model must be wave");
  validate_config(cfg);

  WaveState st = make_wave_state(cfg);
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

  auto sample_series = [&]() {
    const double t = st.u.time;
    auto push = [&](const char* name, double v) {
      record.series[name].t.push_back(t);
      record.series[name].v.push_back(v);
    };
    double sup_v = 0.0, sup_v_omega = 0.0;
    for (std::size_t j = 0; j < st.v.values.size(); ++j) {
      const double av = std::abs(st.v.values[j]);
      sup_v = std::max(sup_v, av);
      if (cfg.damping.eval(st.v.grid.coord(j)) > 0.0)
        sup_v_omega = std::max(sup_v_omega, av);
    }
    push("sup_norm", sup_norm(st.u));
    push("sup_v", sup_v);
    push("sup_v_omega", sup_v_omega);
    push("energy", wave_energy(st, cfg.wave_c));
  };

  sample_series();
  record.snapshots.push_back(st.u);
  record.velocity_snapshots.push_back(st.v);
  for (long long n = 1; n <= steps; ++n) {
    wave_split_step(st, cfg);
    if (n % series_stride == 0 || n == steps) sample_series();
    if ((snap_stride > 0 && n % snap_stride == 0) || n == steps) {
      record.snapshots.push_back(st.u);
      record.velocity_snapshots.push_back(st.v);
    }
  }
  return record;
}

void nls_phase_step(ComplexField& field, double q, double dt) {
  for (std::complex<double>& u : field.values) {
    const double m2 = std::norm(u);
    u *= std::exp(std::complex<double>(0.0, dt * q * m2));
  }
  field.time += dt;
}

void nls_split_step(ComplexField& field, SpectralWorkspace& ws,
                    const DampingProfile& damping, double q, double dt) {
  const double t0 = field.time;
  dispersion_step(field, ws, 0.5 * dt);
  nls_phase_step(field, q, 0.5 * dt);
  damping_flow(field, damping, dt);
  nls_phase_step(field, q, 0.5 * dt);
  dispersion_step(field, ws, 0.5 * dt);
  field.time = t0 + dt;
}

RunRecord run_nls(const RunConfig& cfg) {
  if (cfg.model != Model::nls)
    throw std::invalid_argument("run_nls: model must be nls");
  validate_config(cfg);

  ComplexField field = initial_field_complex(cfg);
  SpectralWorkspace ws(field.values.size(), cfg.length);

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
  const double dx = field.grid.spacing();

  auto sample_series = [&]() {
    const double t = field.time;
    auto push = [&](const char* name, double v) {
      record.series[name].t.push_back(t);
      record.series[name].v.push_back(v);
    };
    double sup = 0.0, mass = 0.0, mass_support = 0.0;
    for (std::size_t j = 0; j < field.values.size(); ++j) {
      const double m2 = std::norm(field.values[j]);
      sup = std::max(sup, std::sqrt(m2));
      mass += m2;
      if (cfg.damping.eval(field.grid.coord(j)) > 0.0) mass_support += m2;
    }
    push("sup_norm", sup);
    push("mass", mass * dx);
    push("mass_on_support", mass_support * dx);
  };

  sample_series();
  record.complex_snapshots.push_back(field);
  for (long long n = 1; n <= steps; ++n) {
    nls_split_step(field, ws, cfg.damping, cfg.nls_q, cfg.dt);
    field.time = static_cast<double>(n) * cfg.dt;
    if (n % series_stride == 0 || n == steps) sample_series();
    if ((snap_stride > 0 && n % snap_stride == 0) || n == steps)
      record.complex_snapshots.push_back(field);
  }
  return record;
}

}  // namespace subdamp
