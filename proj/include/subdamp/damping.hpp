#pragma once

#include <utility>
#include <vector>

#include "subdamp/grid.hpp"

namespace subdamp {

/** Piecewise-constant damping coefficient a(x).
 *
 * Either active everywhere with strength delta, or equal to delta on a union
 * of disjoint open intervals (x0, x0 + width) and zero elsewhere.  The
 * exponent alpha in (0, 1] controls the sublinear term u / |u|^alpha... the
 * damping ODE is  u' = -a(x) u / |u|^alpha  (u' = -a sign(u) |u|^(1-alpha)).
 */
struct DampingProfile {
  double delta = 0.0;
  double alpha = 1.0;
  bool everywhere = false;
  std::vector<std::pair<double, double>> intervals;  // (start, width)

  double eval(double x) const;
  /** Total width of the active set (sum of interval widths). */
  double active_width() const;
};

DampingProfile make_damping_everywhere(double delta, double alpha);
DampingProfile make_damping_window(double delta, double alpha, double x0,
                                   double width);
DampingProfile make_damping_windows(
    double delta, double alpha,
    const std::vector<std::pair<double, double>>& intervals);

/** Exact solution at time dt of  u' = -a sign(u) |u|^(1-alpha),  u(0) = u0:
 * sign(u0) (|u0|^alpha - alpha a dt)_+^(1/alpha).  Hits zero in finite time
 * |u0|^alpha / (alpha a) and stays there.
 */
double damping_flow_scalar(double u0, double a, double alpha, double dt);

/** Time at which damping_flow_scalar first reaches zero. */
double pointwise_extinction_time(double u0, double a, double alpha);

/** Apply the exact damping flow to every point of a field; advances time. */
void damping_flow(RealField& field, const DampingProfile& profile, double dt);

/** Complex variant: the modulus obeys the scalar flow, the phase is frozen. */
void damping_flow(ComplexField& field, const DampingProfile& profile, double dt);

}  // namespace subdamp
