#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace subdamp {

/** Root of a continuous function by bisection.
 *
 * Requires f(lo) and f(hi) to bracket a root (opposite signs, or one of them
 * zero).  Iterates until the bracket width falls below xtol.  Throws
 * std::invalid_argument when the initial values do not bracket.
 */
double bisect(const std::function<double(double)>& f, double lo, double hi,
              double xtol = 1e-14, int max_iter = 200);

/** Adaptive Gauss-Legendre quadrature of f over [a, b].
 *
 * 15-point rule per panel; a panel is accepted when the two-half refinement
 * agrees with the single-panel value to abs_tol (scaled by panel fraction),
 * otherwise it is split.  Throws std::runtime_error if the recursion depth
 * limit is hit before the tolerance is met.
 */
double integrate_adaptive(const std::function<double(double)>& f, double a,
                          double b, double abs_tol = 1e-12);

/** Solve a tridiagonal system in place (Thomas algorithm).
 *
 * sub[i] multiplies x[i-1] in row i (sub[0] unused), diag[i] multiplies x[i],
 * sup[i] multiplies x[i+1] (sup[n-1] unused).  rhs is overwritten with the
 * solution.  No pivoting: intended for diagonally dominant systems.
 */
void solve_tridiagonal(const std::vector<double>& sub,
                       const std::vector<double>& diag,
                       const std::vector<double>& sup,
                       std::vector<double>& rhs);

/** FNV-1a 64-bit hash of a byte string. */
std::uint64_t fnv1a64(std::string_view bytes);

/** Format a double with 17 significant digits (round-trips through text). */
std::string format_g17(double v);

/** Strict double parse: the whole token must be consumed. Throws on failure. */
double parse_double_strict(const std::string& token);

/** Strict positive-integer parse. Throws on failure. */
long long parse_int_strict(const std::string& token);

/** Least-squares slope and intercept of y against x. */
struct LineFit {
  double slope = 0.0;
  double intercept = 0.0;
};
LineFit fit_line(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace subdamp
