#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace trigcert::cli {

enum ExitCode : int { ok = 0, refuted = 1, inconclusive = 2, usage = 64 };

/// Runs one command line (args excludes the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace trigcert::cli
