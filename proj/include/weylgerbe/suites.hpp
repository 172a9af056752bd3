#pragma once

// Named verification suites. Each suite draws every sample from one seeded
// Sampler and records its checks in a fixed order, so a report is a pure
// function of (suite, n, seed, tol, mesh_order) apart from the wall time.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "weylgerbe/linalg.hpp"

namespace weylgerbe {

enum class CheckStatus { Pass, Fail, Skip };

std::string_view to_string(CheckStatus s);

struct CheckResult {
  std::string id;
  std::string anchor;  // the identity being checked, as a formula
  CheckStatus status;
  Complex value;  // residual, or the measured quantity for inequality checks
  double tolerance;
};

struct SuiteReport {
  std::string suite;
  std::size_t n = 0;
  std::uint64_t seed = 0;
  std::vector<CheckResult> checks;
  double wall_time_s = 0.0;

  bool all_passed() const;
  std::size_t count(CheckStatus s) const;
};

struct SuiteOptions {
  std::size_t n = 2;
  std::uint64_t seed = 1;
  double tol = 1e-9;
  int mesh_order = 32;
};

/// appendix-lemmas, cocycles, connective-data, root-space, holonomy and all.
const std::vector<std::string>& suite_names();

/// Throws UnknownSuite or RankOutOfRange.
SuiteReport run_suite(std::string_view name, const SuiteOptions& options);

nlohmann::json to_json(const SuiteReport& report);

}  // namespace weylgerbe
