#pragma once

#include <cstddef>

#include "subdamp/config.hpp"
#include "subdamp/damping.hpp"
#include "subdamp/flux.hpp"
#include "subdamp/grid.hpp"
#include "subdamp/snapshot.hpp"
#include "subdamp/spectral.hpp"

namespace subdamp {

/** One Strang palindrome for the viscous model:
 * advect(dt/2), diffuse(dt/2), damp(dt), diffuse(dt/2), advect(dt/2).
 * The field's time advances by exactly dt.  cfg supplies the damping profile,
 * viscosity, and advection policy. */
void viscous_split_step(RealField& field, SpectralWorkspace& ws,
                        const RunConfig& cfg, const FluxModel& flux,
                        double dt);

RunRecord run_viscous(const RunConfig& cfg);

/** Second-order wave solver on a Dirichlet grid (displacement u, velocity v;
 * boundary nodes pinned to zero). */
struct WaveState {
  RealField u;
  RealField v;
  long long step = 0;
};

WaveState make_wave_state(const RunConfig& cfg);

/** Implicit Newmark step for u_tt = c^2 u_xx with averaging weights theta
 * (velocity) and zeta (displacement); theta = 1/2, zeta = 1/4 conserves the
 * discrete energy.  Interior solve is tridiagonal. */
void newmark_step(WaveState& state, double c, double dt, double theta,
                  double zeta);

/** damp-velocity(dt/2), newmark(dt), damp-velocity(dt/2); time pinned to
 * step * dt. */
void wave_split_step(WaveState& state, const RunConfig& cfg);

/** Discrete energy: sum v^2 dx + c^2 sum (forward-difference of u)^2 / dx. */
double wave_energy(const WaveState& state, double c);

RunRecord run_wave(const RunConfig& cfg);

/** Phase rotation u <- exp(i dt q |u|^2) u (the cubic flow; |u| is exactly
 * preserved).  Advances time by dt. */
void nls_phase_step(ComplexField& field, double q, double dt);

/** One Strang palindrome for the Schroedinger model: dispersion(dt/2),
 * phase(dt/2), damp(dt), phase(dt/2), dispersion(dt/2); time pinned. */
void nls_split_step(ComplexField& field, SpectralWorkspace& ws,
                    const DampingProfile& damping, double q, double dt);

RunRecord run_nls(const RunConfig& cfg);

}  // namespace subdamp
