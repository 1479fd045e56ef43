#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mawdist {

/// Runs the command surface on already-split arguments (program name
/// excluded). Writes results to `out` unless an --output path is given,
/// diagnostics to `err`. Returns 0 on success, 2 on input errors, 3 on
/// internal invariant failures.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace mawdist
