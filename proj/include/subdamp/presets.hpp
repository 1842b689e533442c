#pragma once

#include <string>
#include <vector>

#include "subdamp/config.hpp"

namespace subdamp {

/** Canned experiment configurations.  Each preset is stored as config text so
 * it round-trips the parser; fetch with preset_config and (optionally) coarsen
 * with apply_coarse for quick looks. */
struct Preset {
  std::string name;
  std::string summary;
  std::string text;
  /** Analysis checks this run is expected to satisfy (names understood by
   * analyze_record); run + analyze on the preset should report all passing. */
  std::vector<std::string> checks;
};

const std::vector<Preset>& all_presets();
std::vector<std::string> preset_names();

/** Config text for the named preset; throws std::invalid_argument with the
 * list of known names when absent. */
const Preset& find_preset(const std::string& name);
RunConfig preset_config(const std::string& name);

}  // namespace subdamp
