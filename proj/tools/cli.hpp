#pragma once

#include <iosfwd>

namespace covering::cli {

/// Entry point of the `covering` command. Exit status: 0 success, 1 a
/// contract violation (invalid witness, failed inequality, solver failure),
/// 2 malformed input or usage errors.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace covering::cli
