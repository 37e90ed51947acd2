#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "eolab/pattern.hpp"

namespace eolab::cli {

// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kSuiteFailed = 1,
  kUsage = 2,
  kUnavailable = 3,
  kEnumeration = 4,
  kBudget = 5,
};

// Runs one eolab invocation; args excludes the program name. Results go to
// out, diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// "5,2,9" -> {5, 2, 9}. Throws InvalidArgument on empty fields, non-digits
// or values beyond 64 bits.
std::vector<Natural> parse_naturals(std::string_view text);

}  // namespace eolab::cli
