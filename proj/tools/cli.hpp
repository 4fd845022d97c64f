#pragma once

#include <iosfwd>

namespace elliptica::cli {

/// Exit codes: 0 success, 1 refutation recorded, 2 usage or validation error,
/// 3 I/O or runtime failure.
enum ExitCode : int { kOk = 0, kRefuted = 1, kUsage = 2, kFailure = 3 };

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace elliptica::cli
