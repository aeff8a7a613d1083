#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "octosl/json_io.hpp"

namespace octosl {

struct SuiteOptions {
  std::optional<int> samples;       // suite default when empty
  std::optional<double> tolerance;  // suite default when empty
  std::uint64_t seed = 42;          // root seed
};

struct SuiteReport {
  std::string name;
  int samples = 0;
  double max_residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  std::uint64_t seed = 0;
  double wall_time = 0.0;
  Json details = Json::object();
};

/// Registered suite names in their fixed order.
const std::vector<std::string>& suite_names();
bool has_suite(const std::string& name);
int default_samples(const std::string& name);
double default_tolerance(const std::string& name);

/// Seed for a suite: derived from the root seed and the suite's position in
/// the registry, so the result does not depend on which suites run.
std::uint64_t suite_seed(std::uint64_t root, const std::string& name);

/// Throws std::out_of_range for an unknown name.
SuiteReport run_suite(const std::string& name, const SuiteOptions& opts);

Json to_json(const SuiteReport& r, bool with_time = true);

}  // namespace octosl
