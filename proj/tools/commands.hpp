#pragma once

#include <iosfwd>

namespace extremal::cli {

/// Runs one command line. Returns 0 on success (boolean answers included),
/// 1 when the command fails, 2 on usage errors.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace extremal::cli
