#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace chordexp {

enum ExitCode : int { exit_ok = 0, exit_check_failed = 1, exit_usage = 2 };

// Runs one subcommand. `args` excludes the program name.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace chordexp
