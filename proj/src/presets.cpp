#include "subdamp/presets.hpp"

#include <stdexcept>

namespace subdamp {

namespace {

std::vector<Preset> build_presets() {
  std::vector<Preset> ps;

  ps.push_back(
      {"transport-window",
       "Linear transport (speed 2) with a sublinear damping window on "
       "[0, 0.25]; constant datum 1.25.",
       "model = conservation\n"
       "grid.n = 10000\n"
       "grid.origin = 0\n"
       "grid.length = 1\n"
       "flux = linear\n"
       "flux.c = 2\n"
       "damping.delta = 1\n"
       "damping.alpha = 1\n"
       "damping.omega = 0,0.25\n"
       "dt = 4e-5\n"
       "t_final = 10\n"
       "u0 = constant\n"
       "u0.value = 1.25\n"
       "series.every = 0.002\n"
       "snapshot.every = 1\n"
       "cfl = enforce\n",
       {"extinction", "zero_gap_final"}});

  ps.push_back(
      {"burgers-window",
       "Burgers flow with a damping window on [0, 0.25]; constant datum "
       "1.25.  Fixed stepping replicates a plain split run.",
       "model = conservation\n"
       "grid.n = 20000\n"
       "grid.origin = 0\n"
       "grid.length = 1\n"
       "flux = burgers\n"
       "damping.delta = 1\n"
       "damping.alpha = 1\n"
       "damping.omega = 0,0.25\n"
       "dt = 5e-5\n"
       "t_final = 10\n"
       "u0 = constant\n"
       "u0.value = 1.25\n"
       "series.every = 0.002\n"
       "snapshot.every = 1\n"
       "cfl = fixed\n",
       {"sup_rate", "zero_gap_final", "monotone"}});

  ps.push_back(
      {"bl-window-a1",
       "Nonconvex two-phase flux (k = 0.25) with linear damping (alpha = 1) "
       "on [0, 0.25]; constant datum 1.25.",
       "model = conservation\n"
       "grid.n = 20000\n"
       "grid.origin = 0\n"
       "grid.length = 1\n"
       "flux = buckley_leverett\n"
       "flux.k = 0.25\n"
       "damping.delta = 1\n"
       "damping.alpha = 1\n"
       "damping.omega = 0,0.25\n"
       "dt = 1e-5\n"
       "t_final = 10\n"
       "u0 = constant\n"
       "u0.value = 1.25\n"
       "series.every = 0.002\n"
       "snapshot.every = 1\n"
       "cfl = fixed\n",
       {"sup_rate", "zero_gap_final"}});

  ps.push_back(
      {"bl-window-a34",
       "Nonconvex two-phase flux (k = 0.25) with sublinear damping "
       "(alpha = 0.75) on [0, 0.25]; constant datum 1.25.",
       "model = conservation\n"
       "grid.n = 20000\n"
       "grid.origin = 0\n"
       "grid.length = 1\n"
       "flux = buckley_leverett\n"
       "flux.k = 0.25\n"
       "damping.delta = 1\n"
       "damping.alpha = 0.75\n"
       "damping.omega = 0,0.25\n"
       "dt = 1e-5\n"
       "t_final = 10\n"
       "u0 = constant\n"
       "u0.value = 1.25\n"
       "series.every = 0.002\n"
       "snapshot.every = 1\n"
       "cfl = fixed\n",
       {"sup_rate", "zero_gap_final"}});

  ps.push_back(
      {"viscous-window",
       "Viscous Burgers (mu = 0.01) with sublinear damping (alpha = 0.75) on "
       "[0, 0.25]; runs long enough to reach the post-extinction decay of the "
       "slowest diffusive mode.",
       "model = viscous\n"
       "grid.n = 16384\n"
       "grid.origin = 0\n"
       "grid.length = 1\n"
       "flux = burgers\n"
       "viscous.mu = 0.01\n"
       "damping.delta = 1\n"
       "damping.alpha = 0.75\n"
       "damping.omega = 0,0.25\n"
       "dt = 1e-5\n"
       "t_final = 34\n"
       "u0 = constant\n"
       "u0.value = 1.25\n"
       "series.every = 0.01\n"
       "snapshot.every = 2\n"
       "cfl = enforce\n",
       {"exp_rate"}});

  ps.push_back(
      {"wave-plateau",
       "Dirichlet wave (c = 0.1) with velocity damping on [0.375, 0.625]; "
       "plateau datum of height 1.25, zero initial velocity.  The window "
       "drains over 99% of the energy; the datum's jump at the boundary "
       "leaves a trapped grid-scale residue outside the window.",
       "model = wave\n"
       "grid.n = 3000\n"
       "grid.origin = 0\n"
       "grid.length = 1\n"
       "wave.c = 0.1\n"
       "wave.theta = 0.5\n"
       "wave.zeta = 0.25\n"
       "damping.delta = 1\n"
       "damping.alpha = 1\n"
       "damping.omega = 0.375,0.25\n"
       "dt = 5e-4\n"
       "t_final = 150\n"
       "u0 = plateau\n"
       "u0.value = 1.25\n"
       "series.every = 0.01\n"
       "snapshot.every = 2\n",
       {"energy_decay"}});

  ps.push_back(
      {"nls-soliton",
       "Focusing cubic Schroedinger soliton (speed 20, k = 0.81) on "
       "[-10, 10) with damping off: a travelling-wave accuracy check.",
       "model = nls\n"
       "grid.n = 8192\n"
       "grid.origin = -10\n"
       "grid.length = 20\n"
       "nls.q = 2\n"
       "damping.delta = 0\n"
       "damping.alpha = 1\n"
       "damping.omega = none\n"
       "dt = 5e-4\n"
       "t_final = 0.5\n"
       "u0 = soliton\n"
       "soliton.c = 20\n"
       "soliton.k = 0.81\n"
       "series.every = 0.005\n"
       "snapshot.every = 0.1\n",
       {"mass_conserved"}});

  ps.push_back(
      {"nls-soliton-damped",
       "Focusing cubic Schroedinger soliton crossing two damping windows "
       "([-10, -6] and [6, 10]) each lap of the torus; mass drains on every "
       "pass.",
       "model = nls\n"
       "grid.n = 8192\n"
       "grid.origin = -10\n"
       "grid.length = 20\n"
       "nls.q = 2\n"
       "damping.delta = 1\n"
       "damping.alpha = 1\n"
       "damping.omega = -10,4;6,4\n"
       "dt = 5e-4\n"
       "t_final = 3\n"
       "u0 = soliton\n"
       "soliton.c = 20\n"
       "soliton.k = 0.81\n"
       "series.every = 0.005\n"
       "snapshot.every = 0.5\n",
       {"mass_decay"}});

  return ps;
}

}  // namespace

const std::vector<Preset>& all_presets() {
  static const std::vector<Preset> presets = build_presets();
  return presets;
}

std::vector<std::string> preset_names() {
  std::vector<std::string> names;
  for (const Preset& p : all_presets()) names.push_back(p.name);
  return names;
}

const Preset& find_preset(const std::string& name) {
  for (const Preset& p : all_presets())
    if (p.name == name) return p;
  std::string known;
  for (const Preset& p : all_presets()) {
    if (!known.empty()) known += ", ";
    known += p.name;
  }
  throw std::invalid_argument("unknown preset '" + name + "' (known: " + known +
                              ")");
}

RunConfig preset_config(const std::string& name) {
  return parse_config(find_preset(name).text);
}

}  // namespace subdamp
