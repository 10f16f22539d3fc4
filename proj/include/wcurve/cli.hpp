#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wcurve {

/// Parses and runs one batch command (args exclude the program name).
/// Returns the process exit status: 0 success, 1 verification failure,
/// 2 malformed command line or literal, 3 domain error.
int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err);

}  // namespace wcurve
