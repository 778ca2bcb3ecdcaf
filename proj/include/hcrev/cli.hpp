#ifndef HCREV_CLI_HPP
#define HCREV_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace hcrev {

/// Full command-line harness, exposed as a function so tests can drive it
/// in process. `args` excludes the program name. Returns the process exit
/// code: 0 on success, 1 when a verification suite found a violation, 2 on
/// usage or input errors.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace hcrev

#endif
