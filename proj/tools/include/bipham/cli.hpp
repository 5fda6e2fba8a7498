#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bipham::cli {

enum ExitCode : int { kOk = 0, kInputError = 1, kUnknown = 2 };

// Runs one command line (args excludes the program name). Results go to
// `out`, diagnostics and progress to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bipham::cli
