#include "subdamp/grid.hpp"

#include <cmath>
#include <stdexcept>

namespace subdamp {

Grid1D make_grid(std::size_t n_cells, double length, double origin,
                 Topology topology) {
  if (n_cells < 2)
    throw std::invalid_argument("make_grid: need at least two cells");
  if (!(length > 0.0) || !std::isfinite(length))
    throw std::invalid_argument("make_grid: length must be positive and finite");
  if (!std::isfinite(origin))
    throw std::invalid_argument("make_grid: origin must be finite");
  Grid1D g;
  g.n_cells = n_cells;
  g.origin = origin;
  g.length = length;
  g.topology = topology;
  return g;
}

RealField sample_function(const Grid1D& grid,
                          const std::function<double(double)>& f, double time) {
  RealField field;
  field.grid = grid;
  field.time = time;
  field.values.resize(grid.n_values());
  for (std::size_t j = 0; j < field.values.size(); ++j)
    field.values[j] = f(grid.coord(j));
  return field;
}

ComplexField sample_function_complex(
    const Grid1D& grid, const std::function<std::complex<double>(double)>& f,
    double time) {
  ComplexField field;
  field.grid = grid;
  field.time = time;
  field.values.resize(grid.n_values());
  for (std::size_t j = 0; j < field.values.size(); ++j)
    field.values[j] = f(grid.coord(j));
  return field;
}

bool all_finite(const RealField& field) {
  for (double v : field.values)
    if (!std::isfinite(v)) return false;
  return true;
}

bool all_finite(const ComplexField& field) {
  for (const auto& v : field.values)
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
  return true;
}

double sup_norm(const RealField& field) {
  double m = 0.0;
  for (double v : field.values) m = std::max(m, std::abs(v));
  return m;
}

double sup_norm(const ComplexField& field) {
  double m = 0.0;
  for (const auto& v : field.values) m = std::max(m, std::abs(v));
  return m;
}

double wrap_position(const Grid1D& grid, double x) {
  const double rel = (x - grid.origin) / grid.length;
  double frac = rel - std::floor(rel);
  if (frac >= 1.0) frac = 0.0;  // guard against roundoff at the seam
  return grid.origin + frac * grid.length;
}

double interp_value(const RealField& field, double x) {
  const Grid1D& g = field.grid;
  const double h = g.spacing();
  if (g.topology == Topology::periodic) {
    // Cell centers sit at origin + (j + 1/2) h; find the bracketing pair.
    const double xw = wrap_position(g, x);
    const double s = (xw - g.origin) / h - 0.5;
    const double fl = std::floor(s);
    const double w = s - fl;
    const long long n = static_cast<long long>(g.n_cells);
    long long j0 = static_cast<long long>(fl) % n;
    if (j0 < 0) j0 += n;
    const long long j1 = (j0 + 1) % n;
    return (1.0 - w) * field.values[static_cast<std::size_t>(j0)] +
           w * field.values[static_cast<std::size_t>(j1)];
  }
  // Dirichlet: nodes at origin + j h, clamped at the ends.
  double s = (x - g.origin) / h;
  if (s <= 0.0) return field.values.front();
  const double smax = static_cast<double>(g.n_cells);
  if (s >= smax) return field.values.back();
  const double fl = std::floor(s);
  const std::size_t j0 = static_cast<std::size_t>(fl);
  const double w = s - fl;
  return (1.0 - w) * field.values[j0] + w * field.values[j0 + 1];
}

}  // namespace subdamp
