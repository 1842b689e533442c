#pragma once

#include <string>
#include <vector>

namespace subdamp {

enum class FluxKind { linear, burgers, buckley_leverett };

enum class FluxWrap {
  reflected,  // g(s) = -f(s): flips the sign of the flux
  negated,    // g(s) = -f(-s): odd reflection through the origin
};

/** Scalar flux function f(u), optionally wrapped.
 *
 * Base families:
 *   linear            f(u) = c u
 *   burgers           f(u) = u^2 / 2
 *   buckley_leverett  f(u) = u^2 / (u^2 + k (1 - u)^2)
 *
 * Wraps apply outermost first: parse_flux("negated:burgers", ...) evaluates
 * -f(-u) with f the Burgers flux.
 */
struct FluxModel {
  FluxKind kind = FluxKind::burgers;
  double c = 1.0;   // linear transport speed
  double k = 0.25;  // Buckley-Leverett mobility ratio
  std::vector<FluxWrap> wraps;
};

double eval_flux(const FluxModel& flux, double u);
double eval_flux_derivative(const FluxModel& flux, double u);
double eval_flux_second_derivative(const FluxModel& flux, double u);

/** Parse "linear", "burgers", "buckley_leverett", or wrapped forms like
 * "reflected:burgers" / "negated:reflected:linear".  Throws on unknown names.
 */
FluxModel parse_flux(const std::string& name, double c, double k);

std::string flux_to_string(const FluxModel& flux);

/** max_j |f'(u_j)| over a set of cell values. */
double max_wave_speed(const FluxModel& flux, const std::vector<double>& values);

}  // namespace subdamp
