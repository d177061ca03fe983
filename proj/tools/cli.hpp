#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hf::cli {

/// Exit codes: 0 success, 1 mismatch or failed computation, 2 usage error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitUsage = 2;

/// Runs the command line `args` (without the program name), writing results
/// to `out` and diagnostics to `err`. Depth-like arguments are capped by the
/// HF_MAX_DEPTH environment variable when it is set.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

enum class Format { plain, json, latex, csv };

/// Table 1, 2 or 3 regenerated from the engines.
std::string render_table(int which, Format format);

}  // namespace hf::cli
