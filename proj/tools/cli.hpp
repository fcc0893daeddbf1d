#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace polyadic::cli {

/// Runs one CLI invocation. args excludes the program name.
/// Returns 0 on success, 1 on domain errors (non-unit, not refinable,
/// non-convergent sequence, ...), 2 on usage errors.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace polyadic::cli
