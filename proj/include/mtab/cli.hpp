#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mtab {

/// Full command-line entry point. Returns the process exit code:
/// 0 = success / all checks passed, 1 = a verification failed,
/// 2 = configuration error (bad flags, malformed shapes).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mtab
