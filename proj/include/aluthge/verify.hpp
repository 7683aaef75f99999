#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace aluthge::verify {

struct CheckResult {
  std::string tag;  // stable identifier, e.g. "Prop4.3(4)-norm-contraction"
  std::string description;
  bool passed = false;
  /// Worst observed value of the tested quantity, normalized the same way
  /// as `tolerance` (for lower-bound checks this is the best the data got
  /// to the bound, see description).
  double worst = 0.0;
  double tolerance = 0.0;
  int samples = 0;
};

/// Suites: all, transform, dynamics, shift, numrange, dominance.
std::vector<CheckResult> run_suite(const std::string& suite, std::uint64_t seed);

struct CriterionResult {
  int index = 0;
  std::string label;
  bool passed = false;
  double seconds = 0.0;
  double runtime_limit = 0.0; // 0 = none
  std::vector<CheckResult> checks;
};

/// The acceptance gate: every criterion with its tolerances pinned.
std::vector<CriterionResult> run_acceptance(std::uint64_t seed);

nlohmann::json to_json(const std::vector<CheckResult>& checks, std::uint64_t seed);
nlohmann::json to_json(const std::vector<CriterionResult>& criteria, std::uint64_t seed);

} // namespace aluthge::verify
