#pragma once

namespace gpd {

// The whole command-line surface; returns the process exit code.
// 0 success, 1 verification failure, 2 usage error, 3 infeasible size.
int cli_main(int argc, const char* const* argv);

}  // namespace gpd
