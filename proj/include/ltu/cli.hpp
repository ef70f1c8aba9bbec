#pragma once

#include <ostream>

namespace ltu::cli {

/// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kNegative = 1;
inline constexpr int kInputError = 2;
inline constexpr int kInternal = 3;

/// Entry point behind the `ltu` executable; writes results to `out` (or the
/// -o file) and diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ltu::cli
