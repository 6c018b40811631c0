#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ainfty::cli {

/// Runs the `ainfty` command line on args (without the program name).
/// Exit codes: 0 success, 1 mathematical or validation failure, 2 I/O,
/// parse or usage failure.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ainfty::cli
