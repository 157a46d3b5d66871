#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bqinv::cli {

// Exit codes shared by every subcommand.
inline constexpr int kOk = 0;
inline constexpr int kDomainFailure = 1;  // axiom / condition / precondition failed
inline constexpr int kInputError = 2;     // unreadable, malformed or incompatible input

// Parses argv (argv[0] is the program name) and runs one subcommand.
// Human-readable text, or the JSON manifest with --json, goes to `out`;
// diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// SHA-256 of a byte string, lowercase hex.
std::string sha256_hex(const std::string& bytes);

}  // namespace bqinv::cli
