#pragma once

#include <iosfwd>

namespace kb::cli {

/// Runs the `kirszbraun` command line. Exit codes: 0 the property holds,
/// 1 certified failure (certificate on `out`), 2 usage or validation error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace kb::cli
