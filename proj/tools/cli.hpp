#pragma once

#include <ostream>

namespace annulus::cli {

// Exit codes: 0 ok, 1 failed verification, 2 malformed input, 3 contract violation.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace annulus::cli
