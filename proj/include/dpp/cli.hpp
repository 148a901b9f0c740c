#ifndef DPP_CLI_HPP
#define DPP_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace dpp {

/// Runs one CLI invocation. args holds the words after the program name.
/// Data goes to out, diagnostics to err. Returns the process exit code:
/// 0 on success, 1 on invalid input or a domain error, 2 when the request
/// is well-formed but outside the feasible range.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace dpp

#endif
