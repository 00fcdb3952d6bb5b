#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace packlab {

// Exit codes of the command-line tool.
enum ExitCode { kExitOk = 0, kExitVerificationFailed = 1, kExitUsage = 2 };

// Runs one command. args excludes the program name. Reports go to out,
// diagnostics to err.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run_cli(int argc, char** argv);

}  // namespace packlab
