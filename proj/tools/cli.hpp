#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace stabletrace::cli {

enum ExitCode : int { kOk = 0, kVerificationFailed = 1, kUsage = 2 };

/// Runs one command line. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// dim S_k(SL2(Z)) from the valence formula.
long classical_cusp_dimension(long k);

}  // namespace stabletrace::cli
