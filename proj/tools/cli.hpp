#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace patlas::cli {

/// Runs one poisson-atlas command line (args excludes the program name)
/// and returns the exit status: 0 success, 1 failed verification or domain
/// error, 2 parse or usage error, 3 unsupported computation.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace patlas::cli
