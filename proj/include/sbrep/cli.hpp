#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sbrep {

// Exit codes: 0 clean, 1 relation violation, 2 input or constraint error,
// 3 audit discrepancies present.
inline constexpr int exit_ok = 0;
inline constexpr int exit_violation = 1;
inline constexpr int exit_input_error = 2;
inline constexpr int exit_discrepancy = 3;

// Runs the batch front door in-process; args exclude the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sbrep
