#pragma once

// Command-line front end.  Every invocation writes one JSON document to `out`.
// Exit codes: 0 the property holds (or the command succeeded), 1 it fails,
// 2 invalid input or a violated precondition.

#include <iosfwd>
#include <string>
#include <vector>

namespace chainmdp {

inline constexpr int kReportSchemaVersion = 1;

/// `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

/// 64-bit FNV-1a, as 16 lowercase hex digits.
std::string fnv1a_hex(const std::string& bytes);

}  // namespace chainmdp
