#pragma once

#include <ostream>

namespace adhm::cli {

// Entry point of the `adhm` tool. Data goes to `out`, diagnostics to `err`
// (filtered by the LOG_LEVEL environment variable: error, info or debug).
// Returns 0 on success, 1 when a verification fails, 2 on usage or
// configuration errors.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace adhm::cli
