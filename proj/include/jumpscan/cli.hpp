// Command-line front end. Each subcommand maps onto one library operation.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace jumpscan::cli {

/// Overrides the cache path from the config file; --cache overrides both.
inline constexpr const char* kCacheEnvVar = "JUMPSCAN_CACHE";

enum class OutputFormat { Text, Json, Csv };

struct Config {
  std::optional<std::string> primes;  // "a..b"
  std::uint64_t budget = 10'000'000;
  unsigned period_cutoff = 12;
  OutputFormat format = OutputFormat::Text;
  std::optional<std::string> cache_path;
  unsigned jobs = 1;
};

/// Reads a JSON config file with optional keys primes, budget, period_cutoff,
/// format, cache, jobs.
Config load_config(const std::string& path);

/// Exit status: 0 on success, 1 on validation failure, 2 on usage error.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace jumpscan::cli
