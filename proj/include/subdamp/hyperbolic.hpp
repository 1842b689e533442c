#pragma once

#include "subdamp/config.hpp"
#include "subdamp/flux.hpp"
#include "subdamp/grid.hpp"
#include "subdamp/snapshot.hpp"

namespace subdamp {

/** Courant ceiling used by the enforce policy. */
inline constexpr double kCflMax = 0.9;

/** Two-point Rusanov (local Lax-Friedrichs) numerical flux:
 * F = (f(ul) + f(ur))/2 - max(|f'(ul)|, |f'(ur)|)/2 * (ur - ul).
 */
double rusanov_flux(const FluxModel& flux, double u_left, double u_right);

/** One conservative forward-Euler finite-volume update over dt with periodic
 * wrap.  When enforce_cfl is set, throws std::runtime_error ("cfl-violation")
 * if dt * max|f'(u_j)| / dx exceeds kCflMax.  Advances field.time by dt.
 */
void hyperbolic_step(RealField& field, const FluxModel& flux, double dt,
                     bool enforce_cfl);

/** Advance the advection operator over dt according to the config policy:
 * a fixed advection.substep size if configured, else sub-stepping to satisfy
 * the Courant bound under enforce, else a single step under fixed.
 */
void advect(RealField& field, const FluxModel& flux, double dt,
            const RunConfig& cfg);

struct SolverState {
  RealField field;
  long long step = 0;
  RunConfig cfg;
  FluxModel flux;
};

SolverState make_solver_state(const RunConfig& cfg);

/** One Strang step over cfg.dt.  Stage order per cfg.splitting:
 * ABA = advect(dt/2), damp(dt), advect(dt/2);
 * BAB = damp(dt/2), advect(dt), damp(dt/2).
 * Damping sub-flows are exact. Sets field.time = step * dt exactly.
 */
void strang_step(SolverState& state);

/** Full conservation-law run: series sup_norm, l1_norm, zero_gap, trace_x0,
 * trace_xA at the configured cadence, snapshots at snapshot.every.
 * trace_x0 samples the cell immediately left of the damping-window start,
 * trace_xA the cell immediately right of its end (domain origin when the
 * profile is not a single interval).
 */
RunRecord run_conservation(const RunConfig& cfg);

/** Diagnostic sample positions used by the trace series. */
std::size_t cell_left_of(const Grid1D& grid, double x);
std::size_t cell_right_of(const Grid1D& grid, double x);

}  // namespace subdamp
