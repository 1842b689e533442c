#include "subdamp/characteristics.hpp"

#include <cmath>
#include <stdexcept>

#include "subdamp/numerics.hpp"

namespace subdamp {

void advance_characteristics(std::vector<double>& positions,
                             const RealField& field, const FluxModel& flux,
                             double dt) {
  if (field.grid.topology != Topology::periodic)
    throw std::invalid_argument("characteristics: periodic fields only");
  for (double& x : positions) {
    const double k1 = eval_flux_derivative(flux, interp_value(field, x));
    const double xm = wrap_position(field.grid, x + 0.5 * dt * k1);
    const double k2 = eval_flux_derivative(flux, interp_value(field, xm));
    x = wrap_position(field.grid, x + dt * k2);
  }
}

CharacteristicBundle trace_bundle(const RunRecord& record,
                                  const std::vector<double>& seeds,
                                  double start_time) {
  if (record.snapshots.size() < 2)
    throw std::invalid_argument("trace: need at least two snapshots");
  const double dt = record.config.dt;
  const FluxModel flux = record.config.flux();

  // Start from the first snapshot at or after the requested start time.
  std::size_t first = 0;
  while (first < record.snapshots.size() &&
         record.snapshots[first].time < start_time - 1e-12)
    ++first;
  if (first + 1 >= record.snapshots.size())
    throw std::runtime_error(
        "trace: fewer than two snapshots at or after the start time");

  // Cadence check: consecutive snapshot gaps must be at most 10 run steps.
  for (std::size_t s = first; s + 1 < record.snapshots.size(); ++s) {
    const double gap = record.snapshots[s + 1].time - record.snapshots[s].time;
    if (gap > 10.0 * dt * (1.0 + 1e-9))
      throw std::runtime_error(
          "sparse-record: snapshot cadence exceeds 10 steps; rerun with "
          "snapshot.every <= 10");
  }

  CharacteristicBundle bundle;
  bundle.origin = record.config.origin;
  bundle.length = record.config.length;
  bundle.paths.reserve(seeds.size());
  for (double s : seeds) {
    CharacteristicPath p;
    p.seed = s;
    p.t.push_back(record.snapshots[first].time);
    p.x.push_back(wrap_position(record.snapshots[first].grid, s));
    bundle.paths.push_back(std::move(p));
  }

  for (std::size_t s = first; s + 1 < record.snapshots.size(); ++s) {
    const RealField& frozen = record.snapshots[s];
    const double t0 = frozen.time;
    const double t1 = record.snapshots[s + 1].time;
    const long long n_sub = std::max(1ll, std::llround((t1 - t0) / dt));
    const double h = (t1 - t0) / static_cast<double>(n_sub);
    for (auto& path : bundle.paths) {
      double x = path.x.back();
      std::vector<double> one{x};
      for (long long k = 0; k < n_sub; ++k) {
        advance_characteristics(one, frozen, flux, h);
        path.t.push_back(t0 + static_cast<double>(k + 1) * h);
        path.x.push_back(one[0]);
      }
    }
  }
  return bundle;
}

namespace {

/** Lift a wrapped path to the line: successive displacements are mapped to
 * the minimal image in [-L/2, L/2). */
std::vector<double> unwrap_path(const std::vector<double>& x, double L) {
  std::vector<double> u(x.size());
  if (x.empty()) return u;
  u[0] = x[0];
  for (std::size_t k = 1; k < x.size(); ++k) {
    double d = x[k] - x[k - 1];
    d -= L * std::floor(d / L + 0.5);
    u[k] = u[k - 1] + d;
  }
  return u;
}

}  // namespace

bool paths_stay_ordered(const CharacteristicBundle& bundle, double tol) {
  if (bundle.paths.size() < 2) return true;
  const std::size_t m = bundle.paths.front().x.size();
  for (const auto& p : bundle.paths)
    if (p.x.size() != m)
      throw std::invalid_argument("paths_stay_ordered: ragged bundle");
  std::vector<std::vector<double>> lifted;
  lifted.reserve(bundle.paths.size());
  for (const auto& p : bundle.paths)
    lifted.push_back(unwrap_path(p.x, bundle.length));
  for (std::size_t i = 0; i + 1 < lifted.size(); ++i) {
    // Align the pair so the initial gap sits in [0, L).
    double shift = lifted[i + 1][0] - lifted[i][0];
    shift = bundle.length * std::floor(shift / bundle.length);
    for (std::size_t k = 0; k < m; ++k) {
      const double gap = (lifted[i + 1][k] - shift) - lifted[i][k];
      // Crossing from below, or lapping the neighbour around the circle.
      if (gap < -tol || gap > bundle.length + tol) return false;
    }
  }
  return true;
}

std::string bundle_to_csv(const CharacteristicBundle& bundle) {
  std::string out = "seed_id,t,x\n";
  for (std::size_t i = 0; i < bundle.paths.size(); ++i) {
    const auto& p = bundle.paths[i];
    for (std::size_t k = 0; k < p.t.size(); ++k) {
      out += std::to_string(i);
      out += ',';
      out += format_g17(p.t[k]);
      out += ',';
      out += format_g17(p.x[k]);
      out += '\n';
    }
  }
  return out;
}

}  // namespace subdamp
