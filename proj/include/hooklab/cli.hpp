#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace hooklab::cli {

enum class OutputFormat { text, json, csv };

struct RunConfig {
  std::string command;
  std::optional<int> max_n;
  OutputFormat format = OutputFormat::text;
  unsigned jobs = 1;
  std::uint64_t seed = 20090325;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs the command line (args excludes the program name). Results go to
/// `out`; diagnostics and failure details go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hooklab::cli
