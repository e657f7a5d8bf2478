#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace rankcert {

/// Exit codes of the command-line tool.
inline constexpr int kExitCertified = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitInconclusive = 2;

/// Runs one command; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rankcert
