#pragma once

#include <iosfwd>

namespace cohomdet::cli {

/// Exit codes: 0 success, 1 mathematical failure, 2 input error.
enum ExitCode { ok = 0, failed = 1, bad_input = 2 };

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);
int run(int argc, const char* const* argv);

}  // namespace cohomdet::cli
