#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace heegner::cli {

/// Runs one heegner-forge invocation. `args` excludes the program name.
/// Returns 0 on success, 1 on a domain error (message on err), 2 on a
/// usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace heegner::cli
