#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace dyck {

struct CheckResult {
  std::string name;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::optional<nlohmann::json> counterexample;  // first failure only

  bool ok() const noexcept { return failed == 0; }
};

struct SuiteReport {
  std::string suite;
  long n_max = 0;
  std::uint64_t seed = 0;
  std::vector<CheckResult> checks;
  double wall_time_s = 0.0;

  bool all_pass() const;
  nlohmann::json to_json() const;
};

inline constexpr std::uint64_t default_seed = 20240917;

const std::vector<std::string>& suite_names();

// Runs one of oracle, bijections, identities, series, polys, or all.
// Throws InvalidArgument on an unknown name or n_max < 1.
SuiteReport run_suite(const std::string& name, long n_max, std::uint64_t seed = default_seed);

}  // namespace dyck
