#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <vector>

namespace subdamp {

enum class Topology { periodic, dirichlet };

/** Uniform 1-D mesh.
 *
 * Periodic topology stores one value per cell, located at cell centers
 * origin + (j + 1/2) h.  Dirichlet topology stores nodal values at
 * origin + j h for j = 0..n_cells (n_cells intervals, n_cells + 1 nodes).
 */
struct Grid1D {
  std::size_t n_cells = 0;
  double origin = 0.0;
  double length = 1.0;
  Topology topology = Topology::periodic;

  double spacing() const { return length / static_cast<double>(n_cells); }
  std::size_t n_values() const {
    return topology == Topology::periodic ? n_cells : n_cells + 1;
  }
  double coord(std::size_t j) const {
    const double h = spacing();
    return topology == Topology::periodic
               ? origin + (static_cast<double>(j) + 0.5) * h
               : origin + static_cast<double>(j) * h;
  }
  bool operator==(const Grid1D&) const = default;
};

/** Validated constructor; throws std::invalid_argument on bad parameters. */
Grid1D make_grid(std::size_t n_cells, double length = 1.0, double origin = 0.0,
                 Topology topology = Topology::periodic);

struct RealField {
  Grid1D grid;
  double time = 0.0;
  std::vector<double> values;
};

struct ComplexField {
  Grid1D grid;
  double time = 0.0;
  std::vector<std::complex<double>> values;
};

RealField sample_function(const Grid1D& grid,
                          const std::function<double(double)>& f,
                          double time = 0.0);
ComplexField sample_function_complex(
    const Grid1D& grid, const std::function<std::complex<double>(double)>& f,
    double time = 0.0);

bool all_finite(const RealField& field);
bool all_finite(const ComplexField& field);

double sup_norm(const RealField& field);
double sup_norm(const ComplexField& field);

/** Linear interpolation of a field value at position x.
 *
 * Periodic grids wrap x into [origin, origin + length) and interpolate
 * between neighboring cell centers; Dirichlet grids clamp to the end nodes.
 */
double interp_value(const RealField& field, double x);

/** Wrap x into [origin, origin + length). */
double wrap_position(const Grid1D& grid, double x);

}  // namespace subdamp
