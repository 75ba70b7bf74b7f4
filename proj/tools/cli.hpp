#pragma once

#include <ostream>

namespace r13::cli {

/// Exit codes: 0 ok, 1 unexpected, 2 configuration, 3 data inconsistency, 4 solver failure.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace r13::cli
