#pragma once

// Acceptance suites. Each suite draws its instances from a seeded stream and
// reports one Criterion per acceptance criterion it covers:
//
//   oracle  1 exact vs brute force vs k1,  9 FPT decision
//   bdj     2 mean LIS at n = 400
//   approx  3 approximation sandwich
//   sat     4 3SAT reduction
//   graph   5 graph reduction
//   power   6 power construction and extraction
//   path    7 path realization,  10 figure1 reproduction
//   metric  8 metric axioms

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace ulamk {

struct Criterion {
  int id = 0;
  std::string name;
  bool pass = false;
  /// Measured values; contains no timings so reports stay deterministic.
  nlohmann::json measured;
  double seconds = 0;
  /// 0 when the criterion has no runtime bound.
  double budget_seconds = 0;
};

struct SuiteOptions {
  std::uint64_t seed = 0;
  /// Shards independent instances over OpenMP threads; results are merged in
  /// instance order, so reports are identical either way.
  bool parallel = false;
  /// Instance file for criterion 10; the built-in figure1 instance if empty.
  std::filesystem::path figure1;
  /// Where criterion 10 renders its frames; a temp directory if empty.
  std::filesystem::path scratch_dir;
};

const std::vector<std::string>& suite_names();

/// Throws UnknownSuite.
std::vector<Criterion> run_suite(std::string_view name, const SuiteOptions& options);

/// All suites, criteria sorted by id.
std::vector<Criterion> run_all_suites(const SuiteOptions& options);

nlohmann::json to_json(const Criterion& c);
/// "[PASS] 1 oracle-equivalence ..." for humans.
std::string summary_line(const Criterion& c);

/// Built-in copy of data/figure1.json.
nlohmann::json figure1_json();

}  // namespace ulamk
