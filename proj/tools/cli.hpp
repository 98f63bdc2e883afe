#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sts::cli {

enum ExitCode : int {
  kOk = 0,
  kValidationFailure = 1,
  kUsageError = 2,
  kBudgetExceeded = 3,
};

inline constexpr const char* kToolVersion = "0.1.0";

// Runs one sts-tool command. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Lowercase hex SHA-256 of a file's bytes.
std::string sha256_file(const std::string& path);

}  // namespace sts::cli
