#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace isotile::cli {

/// Runs one command line (without the program name). Reports go to `out`,
/// diagnostics to `err`. Returns 0 on success, 1 when an audit or the
/// optimizer fails and 2 on usage errors, including inadmissible x.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace isotile::cli
