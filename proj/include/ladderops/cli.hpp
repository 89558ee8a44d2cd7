#ifndef LADDEROPS_CLI_HPP_
#define LADDEROPS_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace ladderops {

/// Exit codes of the command-line tool.
enum ExitCode : int { kExitOk = 0, kExitFailure = 1, kExitUsage = 2 };

/**
 * Entry point for `ladder_ops table|verify|eval|quad`. args excludes the
 * program name. Output goes to out, diagnostics to err. The default output
 * format is csv, overridden by LADDER_OPS_FORMAT, overridden by --format.
 */
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ladderops

#endif  // LADDEROPS_CLI_HPP_
