#pragma once

#include <cstddef>
#include <string>

#include "subdamp/damping.hpp"
#include "subdamp/flux.hpp"
#include "subdamp/grid.hpp"

namespace subdamp {

enum class Model { conservation, viscous, wave, nls };

/** Advection time-step policy.
 *
 * enforce: sub-step the advection operator so every sub-step has Courant
 *          number dt_sub * max|f'| / dx <= 0.9; a raw hyperbolic_step call
 *          that violates the bound is an error.
 * fixed:   take the configured dt as-is, no check and no sub-stepping.
 */
enum class CflPolicy { enforce, fixed };

/** Strang stage order: aba = advection half / damping full / advection half;
 * bab = damping half / advection full / damping half. */
enum class SplitOrder { aba, bab };

struct InitSpec {
  enum class Kind { constant, sine, plateau, riemann, soliton, file };
  Kind kind = Kind::constant;
  double value = 1.25;      // constant level; plateau scale
  double mean = 1.0;        // sine: mean + amplitude * sin(2 pi freq (x-origin)/L)
  double amplitude = 0.2;
  double frequency = 1.0;
  double left = 1.0;        // riemann: left of the jump
  double right = 0.0;
  double jump = 0.5;        // jump position
  std::string path;         // file: load a snapshot as initial datum
};

struct RunConfig {
  Model model = Model::conservation;
  std::size_t grid_n = 0;
  double origin = 0.0;
  double length = 1.0;
  std::string flux_name = "burgers";
  double flux_c = 1.0;
  double flux_k = 0.25;
  DampingProfile damping;   // delta = 0 by default (no damping)
  std::string omega_text = "none";
  double dt = 0.0;
  double t_final = 0.0;
  InitSpec init;
  double mu = 0.01;         // viscous diffusion coefficient
  double wave_c = 0.1;
  double wave_theta = 0.5;
  double wave_zeta = 0.25;
  double nls_q = 2.0;
  double soliton_c = 20.0;
  double soliton_k = 0.81;
  double snapshot_every = 0.0;  // time between stored snapshots; 0 = first/last only
  double series_every = 0.0;    // time between series samples; 0 = every step
  CflPolicy cfl = CflPolicy::enforce;
  SplitOrder splitting = SplitOrder::aba;
  double advection_substep = 0.0;  // >0: fixed advection sub-step size

  FluxModel flux() const { return parse_flux(flux_name, flux_c, flux_k); }
  Grid1D grid() const {
    return make_grid(grid_n, length, origin,
                     model == Model::wave ? Topology::dirichlet
                                          : Topology::periodic);
  }
  long long n_steps() const;
};

/** Parse "key = value" config text. '#' lines and blank lines are skipped.
 * Unknown keys, duplicate keys, and malformed lines raise std::runtime_error
 * naming the line number; constraint violations name the constraint.
 */
RunConfig parse_config(const std::string& text);
RunConfig parse_config_file(const std::string& path);

/** Canonical serialization: fixed key order, 17-digit numerics.  Parsing the
 * output reproduces the config (round-trip identity). */
std::string serialize_config(const RunConfig& cfg);

/** Hex FNV-1a hash of the canonical serialization. */
std::string config_hash(const RunConfig& cfg);

/** Validate all constraints (called by parse_config; public for programmatic
 * configs). Throws std::runtime_error naming the violated constraint. */
void validate_config(const RunConfig& cfg);

/** Scale dx and dt together by factor n (grid_n / n, dt * n). */
void apply_coarse(RunConfig& cfg, long long n);

/** Sample the configured initial datum (real models). */
RealField initial_field(const RunConfig& cfg);
/** Sample the configured initial datum (nls). */
ComplexField initial_field_complex(const RunConfig& cfg);

/** Plateau profile with exponential tails on the normalized coordinate:
 * 1 on [0.1, 0.9], 1 - exp(-0.1/(0.1-s)) for s < 0.1, mirrored for s > 0.9. */
double plateau_profile(double s);

/** Soliton profile sqrt(2k/q) sech(sqrt(k)(x-ct)) e^{i(c/2)(x-ct)} e^{i(k+c^2/4)t}. */
std::complex<double> soliton_value(double x, double t, double c, double k,
                                   double q);

}  // namespace subdamp
