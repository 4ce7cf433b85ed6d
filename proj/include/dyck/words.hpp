#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dyck/bigint.hpp"
#include "dyck/compositions.hpp"

namespace dyck {

enum class Step : std::uint8_t { D = 0, U = 1 };

// A finite word over {U, D}, packed one bit per step (U = 1, D = 0).
// Ordering is lexicographic with U < D, shorter prefixes first.
class StepWord {
 public:
  StepWord() = default;
  explicit StepWord(std::size_t length, Step fill = Step::D);

  // Accepts "UUDD" or the tree alphabet "(())".
  static StepWord parse(std::string_view text);

  std::size_t size() const noexcept { return size_; }
  bool empty() const noexcept { return size_ == 0; }
  Step operator[](std::size_t i) const noexcept {
    return (blocks_[i >> 6] >> (i & 63)) & 1u ? Step::U : Step::D;
  }
  void set(std::size_t i, Step s) noexcept {
    const std::uint64_t bit = std::uint64_t{1} << (i & 63);
    if (s == Step::U)
      blocks_[i >> 6] |= bit;
    else
      blocks_[i >> 6] &= ~bit;
  }
  void push_back(Step s);
  void pop_back() noexcept;
  void append(const StepWord& other);

  std::size_t count(Step s) const noexcept;
  StepWord rotated(std::size_t start) const;
  StepWord slice(std::size_t pos, std::size_t len) const;

  std::string str() const;
  std::string parens() const;

  friend bool operator==(const StepWord& a, const StepWord& b) noexcept {
    return a.size_ == b.size_ && a.blocks_ == b.blocks_;
  }
  friend std::strong_ordering operator<=>(const StepWord& a, const StepWord& b) noexcept;

 private:
  std::vector<std::uint64_t> blocks_;
  std::size_t size_ = 0;
};

StepWord operator+(StepWord a, const StepWord& b);

// A balanced word whose every prefix has at least as many U as D.
class DyckWord {
 public:
  DyckWord() = default;
  explicit DyckWord(StepWord steps);

  static DyckWord parse(std::string_view text) { return DyckWord(StepWord::parse(text)); }
  static bool is_dyck(const StepWord& steps) noexcept;

  const StepWord& steps() const noexcept { return steps_; }
  std::size_t semilength() const noexcept { return steps_.size() / 2; }
  std::size_t size() const noexcept { return steps_.size(); }
  bool empty() const noexcept { return steps_.empty(); }
  Step operator[](std::size_t i) const noexcept { return steps_[i]; }
  std::string str() const { return steps_.str(); }

  friend bool operator==(const DyckWord&, const DyckWord&) = default;
  friend std::strong_ordering operator<=>(const DyckWord& a, const DyckWord& b) noexcept {
    return a.steps_ <=> b.steps_;
  }

 private:
  struct trusted_t {};
  DyckWord(StepWord steps, trusted_t) : steps_(std::move(steps)) {}
  friend void for_each_dyck(std::size_t, const std::function<void(const DyckWord&)>&);

  StepWord steps_;
};

// Contiguous occurrences of U^r D (r >= 1); equals the number of maximal
// U-runs of length >= r that are followed by a D.
std::size_t count_factor(const StepWord& w, std::size_t r);
inline std::size_t count_factor(const DyckWord& w, std::size_t r) { return count_factor(w.steps(), r); }

// Semilength plus k_1..k_r, k_i = count_factor(w, i).
struct StatProfile {
  std::size_t semilength = 0;
  std::vector<std::size_t> counts;

  // k_1 >= k_2 >= ... >= k_r and, when any k_i is nonzero, n >= sum k_i.
  bool consistent() const noexcept;
  friend bool operator==(const StatProfile&, const StatProfile&) = default;
};
StatProfile stat_profile(const DyckWord& w, std::size_t r);

// Lengths of the maximal U-runs, left to right. Throws EmptyWord.
Composition rise_composition(const DyckWord& w);

// Every nonempty prefix has #U > k * #D.
bool is_dominating(const StepWord& s, std::size_t k);

// Start indices i (0-based) whose rotation s[i..] s[..i) is k-dominating.
// Positions are counted individually, so a periodic word contributes each of
// its repeated rotations; the total is max(#U - k #D, 0).
std::vector<std::size_t> dominating_shifts(const StepWord& s, std::size_t k);

// The same rotations with repeats removed, sorted.
std::vector<StepWord> distinct_dominating_rotations(const StepWord& s, std::size_t k);

enum class Bead : std::uint8_t { circle, square };

// For k circles and k+1 squares: the unique rotation start whose every proper
// prefix has #square <= #circle. Throws BadCounts on other counts.
std::size_t unique_balanced_shift(std::span<const Bead> beads);

// All Dyck words of semilength n in lexicographic order (U < D).
void for_each_dyck(std::size_t n, const std::function<void(const DyckWord&)>& visit);
std::vector<DyckWord> enumerate_dyck(std::size_t n);

// Paths from (0,0) with n up steps and n-r down steps that never go below the
// axis (the D^{(r)} families). r = 0 gives Dyck words.
bool is_elevated_path(const StepWord& s, std::size_t r) noexcept;
void for_each_elevated_path(std::size_t n, std::size_t r, const std::function<void(const StepWord&)>& visit);

// Brute-force ground truth: number of semilength-n Dyck words with k UD- and
// m UUD-factors.
BigCount w_oracle(std::size_t n, std::size_t k, std::size_t m);
// Same with count_factor(., i) = ks[i-1] for every i <= ks.size().
BigCount w_oracle_multi(std::size_t n, std::span<const std::size_t> ks);

// Joint distribution of (k_1..k_r) over all Dyck words of semilength n.
std::map<std::vector<std::size_t>, std::uint64_t> factor_histogram(std::size_t n, std::size_t r);

}  // namespace dyck
