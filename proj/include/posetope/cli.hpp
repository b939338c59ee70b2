#pragma once

#include <iosfwd>

namespace posetope {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitTheoremFailure = 2;

/// Entry point of the `posetope` tool, with injectable streams for tests.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace posetope
