#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace triameter::cli {

inline constexpr int kExitOk = 0;
/// A law was violated or a counterexample was found.
inline constexpr int kExitViolation = 1;
/// Bad arguments or unreadable input.
inline constexpr int kExitUsage = 2;

/// Runs one invocation. JSON goes to `out`, diagnostics to `err`; `in`
/// stands in for stdin when no --input path is given.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

} // namespace triameter::cli
