#pragma once

#include <ostream>

namespace kstab {

// Runs one CLI command; JSON record on out, diagnostics on err. Exit codes:
// 0 success / polystable, 2 usage or domain error, 3 strictly semistable,
// 4 unstable, 5 futaki nonzero, 6 threshold bracket without sign change.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace kstab
