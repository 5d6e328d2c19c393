#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "gl2lab/report.hpp"

namespace gl2lab::cli {

enum ExitCode : int { kSuccess = 0, kCheckFailed = 1, kUsageError = 2 };

/// Runs one command line (without the program name). Normal output goes to
/// `out`, diagnostics and cache notes to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Throws IoError.
void write_report(const VerificationReport& report, const std::string& path);

}  // namespace gl2lab::cli
