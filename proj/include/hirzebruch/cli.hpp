#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "hirzebruch/picard.hpp"

namespace hirz::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainError = 1;
inline constexpr int kExitUsage = 2;

/// Parses "a,b" into aC0 + bf0. Anything else (spaces, extra fields) is rejected.
std::optional<DivisorClass> parse_divisor(std::string_view text);

/// Runs one invocation. `args` excludes the program name. Results go to `out`,
/// diagnostics to `err`; the return value is the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace hirz::cli
