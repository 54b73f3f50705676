#pragma once

// Command-line front end shared by the `dsrg` tool and the tests.
//
// Exit codes: 0 success, 1 domain failure (not a DSRG, infeasible, axiom
// violation, reproduction mismatch), 2 usage, input or resource-limit error.

#include <iosfwd>
#include <string>
#include <vector>

namespace dsrg {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitUsage = 2;

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace dsrg
