#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cliquesplit::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kIoError = 1;
inline constexpr int kPrecondition = 2;
inline constexpr int kExhausted = 3;
inline constexpr int kInvalid = 4;

// Runs one command line (without the program name). Everything the command
// prints goes to `out` / `err`, so tests can call it in-process.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cliquesplit::cli
