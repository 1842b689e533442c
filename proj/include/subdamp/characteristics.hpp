#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "subdamp/flux.hpp"
#include "subdamp/grid.hpp"
#include "subdamp/snapshot.hpp"

namespace subdamp {

/** One midpoint (RK2) step of dX/dt = f'(u(X)) for each position, sampling u
 * from the frozen field by periodic linear interpolation.  Positions wrap to
 * [origin, origin + length). */
void advance_characteristics(std::vector<double>& positions,
                             const RealField& field, const FluxModel& flux,
                             double dt);

/** A characteristic path: (t, x) samples for one seed. */
struct CharacteristicPath {
  double seed = 0.0;
  std::vector<double> t;
  std::vector<double> x;
};

struct CharacteristicBundle {
  double origin = 0.0;
  double length = 1.0;
  std::vector<CharacteristicPath> paths;
};

/** Integrate characteristics through a recorded run, holding the field frozen
 * between consecutive snapshots and stepping with the run's own dt.  The
 * record's snapshot cadence must be at most 10 steps, else the frozen-field
 * sampling is too stale ("sparse-record" error).  Seeds start at the first
 * snapshot whose time is >= start_time. */
CharacteristicBundle trace_bundle(const RunRecord& record,
                                  const std::vector<double>& seeds,
                                  double start_time = 0.0);

/** True when the paths keep their initial left-to-right order at every shared
 * sample index (no crossing, up to tol). */
bool paths_stay_ordered(const CharacteristicBundle& bundle, double tol = 1e-9);

/** CSV rows "seed_id,t,x" with a header line. */
std::string bundle_to_csv(const CharacteristicBundle& bundle);

}  // namespace subdamp
