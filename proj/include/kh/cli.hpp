#pragma once

#include <iosfwd>

namespace kh {

// Entry point of the kh tool. Returns 0 on success or a passing
// verification, 1 on a failing verification and 2 on bad input.
int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace kh
