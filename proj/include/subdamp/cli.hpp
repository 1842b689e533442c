#pragma once

namespace subdamp {

/** Full command-line driver (run / trace / oracle / analyze / sweep /
 * presets).  Returns the process exit code; never throws — errors are
 * reported on stderr. */
int run_cli(int argc, const char* const* argv);

}  // namespace subdamp
