#pragma once

#include <iosfwd>

namespace indeperm {

/// Command-line dispatch. Reports go to `out` as JSON (or CSV where
/// supported); diagnostics go to `err`. Exit code 0 on success or a passing
/// verification, 1 on a verification mismatch, 2 on usage errors, 3 when
/// sequence data cannot be obtained.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace indeperm
