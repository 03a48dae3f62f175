#pragma once

#include "codecert/report.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace codecert::cli {

enum ExitCode : int { kPass = 0, kFailed = 1, kUsage = 2, kMalformed = 3 };

/// Runs one command line (without the program name). The report goes to out,
/// usage and file errors to err. Returns the process exit status.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace codecert::cli
