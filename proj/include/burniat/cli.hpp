#pragma once

#include <ostream>

namespace burniat {

// Exit codes: 0 consistent (and every diffed cell matches), 1 consistent but
// printed values disagree, 2 internal inconsistency or invalid input.
inline constexpr int kExitOk = 0;
inline constexpr int kExitErrata = 1;
inline constexpr int kExitFailure = 2;

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace burniat
