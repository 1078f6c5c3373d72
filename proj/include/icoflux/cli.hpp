#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace icoflux {

// Runs the command line. Returns the process exit code: 0 on success, 1 on a
// validation failure, 2 on bad flags/usage.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace icoflux
