#pragma once

// Command-line surface. Subcommands dispatch to the library modules and
// write one machine-readable document (JSON, CSV or an aligned table) to
// stdout; diagnostics go to stderr. Exit codes: 0 success, 2 usage or
// validation error, 3 numerical failure.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace symamp::cli {

enum class Command { kSpectrum, kBound, kOptimize, kVerify, kSimulate, kReproduce };
enum class OutputFormat { kJson, kCsv, kTable };
enum class OptimizeMode { kLeakless, kLeaky, kBoth };

struct RunConfig {
  Command command = Command::kSpectrum;
  int n = 2;
  double alpha = 0.0;
  std::optional<double> beta;
  OptimizeMode mode = OptimizeMode::kBoth;
  std::optional<long long> trials;
  std::uint64_t seed = 1;
  double efficiency = 1.0;
  std::optional<std::string> scenario;   // usd-two | usd-multiport | amplify
  std::string property = "1";            // 1 | 2 | logconcave
  double grid_step = 0.01;
  OutputFormat format = OutputFormat::kJson;
  int precision = 15;                    // significant digits in output
  double tolerance_scale = 1.0;          // reproduce only
};

// Validates the config, runs the command, writes the report to `out`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

// Parses argv (with SYMAMP_SEED / SYMAMP_PRECISION environment overrides)
// and calls run() on std::cout / std::cerr.
int main(int argc, char** argv);

}  // namespace symamp::cli
