#pragma once

#include <iosfwd>

namespace mpc {

/// Full command-line front end; returns the process exit code:
/// 0 success, 1 golden-example mismatch, 2 parse error, 3 invariant
/// violation, 4 internal assertion.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace mpc
