#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace stci {

inline constexpr const char* kToolVersion = "0.1.0";

// Runs the command-line tool on the given arguments (program name excluded)
// and writes to the given streams. Returns the process exit code:
//   0  success (positive verdict: Certified / is_image / plain report)
//   1  negative or undetermined verdict (NotCertified, not an image, ...)
//   2  input or usage error
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

} // namespace stci
