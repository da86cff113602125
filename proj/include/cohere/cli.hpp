#pragma once

#include <iosfwd>

namespace cohere {

/// Exit status: 0 verdict computed, 1 input or validation error, 2 internal
/// invariant failure.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cohere
