#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

namespace dyck {

struct Verdict {
  std::string instance;
  bool pass = false;
  nlohmann::json detail;
};

// Outcome of sweeping an open conjecture over a finite range. Nothing here
// claims anything beyond the instances listed.
struct ConjectureReport {
  int id = 0;
  std::string name;
  nlohmann::json range;
  std::vector<Verdict> verdicts;
  std::optional<nlohmann::json> counterexample;  // first failing instance
  double wall_time_s = 0.0;

  bool all_pass() const;
  std::size_t failures() const;
  nlohmann::json to_json() const;
};

// W_{k,k} -> W_{k+1,k} -> ... -> W_{n_max,k}.
ConjectureReport check_sturm_sequence(long k, long n_max);

// W_{n,1} -> ... -> W_{n,j} <- ... <- W_{n,n} for some pivot j.
ConjectureReport check_sturm_unimodal(long n);

// The k for which both decomposition parts of W_{n,k} are real-rooted
// (the zero polynomial counts as real-rooted), per the five-case rule.
std::set<long> predicted_realrooted_ks(long n);
ConjectureReport check_realroot_characterization(long n_max = 30);

// Closed forms for the decomposition parts of W_{2k,k}, W_{2k,k+1} and
// W_{2k,k-1}. The last one is tested against both the absolute-value parts
// and the signed values. Throws InvalidArgument when k_max < 2.
ConjectureReport check_w2k_formulas(long k_max);

}  // namespace dyck
