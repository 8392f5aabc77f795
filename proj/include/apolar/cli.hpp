#ifndef APOLAR_CLI_HPP
#define APOLAR_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace apolar {

// Full command dispatch, in-process. args excludes the program name.
// Returns the process exit code: 0 on success (verdicts included),
// 1 on domain errors, 2 on usage and parse errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace apolar

#endif
