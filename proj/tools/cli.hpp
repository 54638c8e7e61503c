#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace inru::cli {

// Exit codes of the command-line tool.
enum ExitCode : int
{
  exit_ok = 0,
  exit_usage = 2,
  exit_data = 3,
  exit_io = 4
};

// Runs the tool on argv-style arguments (args[0] is the program name) and
// returns the exit code. Reports go to out (unless --out names a file),
// diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace inru::cli
