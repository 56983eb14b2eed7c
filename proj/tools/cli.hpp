#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace ulamk::cli {

enum ExitCode : int {
  kOk = 0,
  kFailure = 1,
  kInvalidInput = 2,
  kInfeasible = 3,
  kSizeGuard = 4,
};

struct RunConfig {
  /// solve | approx | decide | distance | reduce | extract | pack | gen | bench
  std::string command;
  /// exact|brute|k1 for solve, sat|graph|power|upower|pad for reduce,
  /// lfs|u for extract, suite name for bench.
  std::string mode;
  std::string input;
  std::string output;
  std::string symbols_out;
  std::string rects;
  std::string frames_dir;
  std::string set;
  std::uint64_t seed = 0;
  long long l = -1;
  int c = 2;
  long long n = 0;
  long long k = 1;
  bool emit_path = false;
  bool parallel = false;
};

/// Seed from ULAMK_SEED when set and parseable, 0 otherwise.
std::uint64_t default_seed();

/// Runs one command; the JSON result goes to `out` as a single line,
/// diagnostics to `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv with CLI11 and calls run(). Parse errors exit with 2.
int main_entry(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace ulamk::cli
