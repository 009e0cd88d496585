#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace graphmin::cli {

inline constexpr int kExitDecided = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitUnknown = 2;
inline constexpr int kExitCheckFailed = 3;

/// Runs one command line. `args` excludes the program name. Output is
/// buffered and written to `out` only once the command has finished.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// 64-bit FNV-1a, used for input_digest.
std::uint64_t fnv1a64(std::string_view bytes, std::uint64_t seed = 0xcbf29ce484222325ULL);

}  // namespace graphmin::cli
