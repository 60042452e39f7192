// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace denseplan::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitParse = 2;
inline constexpr int kExitNumeric = 3;
inline constexpr int kExitInfeasible = 4;
inline constexpr int kExitValidation = 5;

inline constexpr int kSchemaVersion = 1;

/// Entry point shared by the planner binary and the tests. Returns an exit code.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace denseplan::cli
