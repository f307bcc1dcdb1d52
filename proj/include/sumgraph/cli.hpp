#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace sumgraph::cli {

// Runs one command-line invocation.  `args` excludes the program name.
// Results go to `out` as one JSON object per line (or DOT text when asked);
// diagnostics go to `err`.  Returns the process exit code: 0 on success,
// 1 when a requested check fails or a construction breaks an invariant,
// 2 for unusable input (bad flags, bad values, out-of-range sizes).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sumgraph::cli
