#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace webgram::cli {

enum ExitCode : int { kOk = 0, kPrecondition = 1, kParse = 2 };

// Runs one command line (without the program name). Results go to `out` or
// to the --output file, one-line diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace webgram::cli
