#include "dyck/words.hpp"

#include <algorithm>
#include <bit>

#include "dyck/error.hpp"

namespace dyck {

StepWord::StepWord(std::size_t length, Step fill)
    : blocks_((length + 63) / 64, fill == Step::U ? ~std::uint64_t{0} : 0), size_(length) {
  if (fill == Step::U && (length & 63)) blocks_.back() &= (std::uint64_t{1} << (length & 63)) - 1;
}

StepWord StepWord::parse(std::string_view text) {
  StepWord w;
  for (char c : text) {
    switch (c) {
      case 'U': case 'u': case '(': w.push_back(Step::U); break;
      case 'D': case 'd': case ')': w.push_back(Step::D); break;
      case ' ': case '\n': case '\r': case '\t': break;
      default:
        throw Error(Errc::parse_error, std::string("unexpected character '") + c + "' in step word");
    }
  }
  return w;
}

void StepWord::push_back(Step s) {
  if ((size_ & 63) == 0) blocks_.push_back(0);
  ++size_;
  set(size_ - 1, s);
}

void StepWord::pop_back() noexcept {
  set(size_ - 1, Step::D);
  --size_;
  if ((size_ & 63) == 0) blocks_.pop_back();
}

void StepWord::append(const StepWord& other) {
  for (std::size_t i = 0; i < other.size(); ++i) push_back(other[i]);
}

std::size_t StepWord::count(Step s) const noexcept {
  std::size_t ones = 0;
  for (auto b : blocks_) ones += static_cast<std::size_t>(std::popcount(b));
  return s == Step::U ? ones : size_ - ones;
}

StepWord StepWord::rotated(std::size_t start) const {
  StepWord out(size_);
  if (size_ == 0) return out;
  start %= size_;
  for (std::size_t i = 0; i < size_; ++i) out.set(i, (*this)[(start + i) % size_]);
  return out;
}

StepWord StepWord::slice(std::size_t pos, std::size_t len) const {
  if (pos > size_ || len > size_ - pos) throw Error(Errc::invalid_argument, "slice out of range");
  StepWord out(len);
  for (std::size_t i = 0; i < len; ++i) out.set(i, (*this)[pos + i]);
  return out;
}

std::string StepWord::str() const {
  std::string s(size_, 'D');
  for (std::size_t i = 0; i < size_; ++i)
    if ((*this)[i] == Step::U) s[i] = 'U';
  return s;
}

std::string StepWord::parens() const {
  std::string s(size_, ')');
  for (std::size_t i = 0; i < size_; ++i)
    if ((*this)[i] == Step::U) s[i] = '(';
  return s;
}

std::strong_ordering operator<=>(const StepWord& a, const StepWord& b) noexcept {
  const std::size_t common = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < common; ++i) {
    if (a[i] != b[i]) return a[i] == Step::U ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return a.size() <=> b.size();
}

StepWord operator+(StepWord a, const StepWord& b) {
  a.append(b);
  return a;
}

bool DyckWord::is_dyck(const StepWord& steps) noexcept {
  long height = 0;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    height += steps[i] == Step::U ? 1 : -1;
    if (height < 0) return false;
  }
  return height == 0;
}

DyckWord::DyckWord(StepWord steps) : steps_(std::move(steps)) {
  if (!is_dyck(steps_)) throw Error(Errc::not_dyck, "'" + steps_.str() + "' is not a Dyck word");
}

std::size_t count_factor(const StepWord& w, std::size_t r) {
  if (r == 0) throw Error(Errc::invalid_argument, "factor length must be at least 1");
  std::size_t hits = 0, run = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] == Step::U) {
      ++run;
    } else {
      if (run >= r) ++hits;
      run = 0;
    }
  }
  return hits;
}

bool StatProfile::consistent() const noexcept {
  std::size_t sum = 0;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    if (i > 0 && counts[i] > counts[i - 1]) return false;
    sum += counts[i];
  }
  return sum == 0 || semilength >= sum;
}

StatProfile stat_profile(const DyckWord& w, std::size_t r) {
  StatProfile p;
  p.semilength = w.semilength();
  for (std::size_t i = 1; i <= r; ++i) p.counts.push_back(count_factor(w, i));
  return p;
}

Composition rise_composition(const DyckWord& w) {
  if (w.empty()) throw Error(Errc::empty_word, "rise composition of the empty word");
  std::vector<int> runs;
  int run = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] == Step::U) {
      ++run;
    } else if (run > 0) {
      runs.push_back(run);
      run = 0;
    }
  }
  return Composition(std::move(runs));
}

namespace {

// Prefix test on the rotation starting at `start` without materialising it.
bool rotation_dominates(const StepWord& s, std::size_t start, std::size_t k) {
  const std::size_t len = s.size();
  long long score = 0;
  for (std::size_t i = 0; i < len; ++i) {
    score += s[(start + i) % len] == Step::U ? 1 : -static_cast<long long>(k);
    if (score <= 0) return false;
  }
  return true;
}

}  // namespace

bool is_dominating(const StepWord& s, std::size_t k) { return s.empty() || rotation_dominates(s, 0, k); }

std::vector<std::size_t> dominating_shifts(const StepWord& s, std::size_t k) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < s.size(); ++i)
    if (rotation_dominates(s, i, k)) out.push_back(i);
  return out;
}

std::vector<StepWord> distinct_dominating_rotations(const StepWord& s, std::size_t k) {
  std::vector<StepWord> out;
  for (std::size_t i : dominating_shifts(s, k)) out.push_back(s.rotated(i));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::size_t unique_balanced_shift(std::span<const Bead> beads) {
  const std::size_t len = beads.size();
  const auto squares = static_cast<std::size_t>(std::count(beads.begin(), beads.end(), Bead::square));
  if (len == 0 || squares * 2 != len + 1) {
    throw Error(Errc::bad_counts, "need k circles and k+1 squares, got " + std::to_string(len - squares) +
                                      " and " + std::to_string(squares));
  }
  // Walk with circle = +1, square = -1. The rotation must start right after
  // the first position where the running total reaches its minimum.
  long long score = 0, best = 0;
  std::size_t best_end = 0;
  for (std::size_t i = 0; i < len; ++i) {
    score += beads[i] == Bead::circle ? 1 : -1;
    if (score < best) {
      best = score;
      best_end = i + 1;
    }
  }
  return best_end % len;
}

namespace {

void dyck_rec(StepWord& cur, std::size_t ups_left, std::size_t height, std::size_t downs_left,
              const std::function<void(const StepWord&)>& emit) {
  if (ups_left == 0 && downs_left == 0) {
    emit(cur);
    return;
  }
  if (ups_left > 0) {
    cur.push_back(Step::U);
    dyck_rec(cur, ups_left - 1, height + 1, downs_left, emit);
    cur.pop_back();
  }
  if (downs_left > 0 && height > 0) {
    cur.push_back(Step::D);
    dyck_rec(cur, ups_left, height - 1, downs_left - 1, emit);
    cur.pop_back();
  }
}

}  // namespace

void for_each_dyck(std::size_t n, const std::function<void(const DyckWord&)>& visit) {
  StepWord cur;
  dyck_rec(cur, n, 0, n, [&](const StepWord& s) { visit(DyckWord(s, DyckWord::trusted_t{})); });
}

std::vector<DyckWord> enumerate_dyck(std::size_t n) {
  std::vector<DyckWord> out;
  for_each_dyck(n, [&](const DyckWord& w) { out.push_back(w); });
  return out;
}

bool is_elevated_path(const StepWord& s, std::size_t r) noexcept {
  long height = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    height += s[i] == Step::U ? 1 : -1;
    if (height < 0) return false;
  }
  return height == static_cast<long>(r);
}

void for_each_elevated_path(std::size_t n, std::size_t r, const std::function<void(const StepWord&)>& visit) {
  if (r > n) return;
  StepWord cur;
  dyck_rec(cur, n, 0, n - r, visit);
}

BigCount w_oracle(std::size_t n, std::size_t k, std::size_t m) {
  // Outside m <= k, k + m <= n only (UD)^n survives, with m = 0.
  if ((m > k || k + m > n) && !(m == 0 && k == n)) return 0;
  std::uint64_t hits = 0;
  for_each_dyck(n, [&](const DyckWord& w) {
    if (count_factor(w, 1) == k && count_factor(w, 2) == m) ++hits;
  });
  return BigCount(static_cast<unsigned long>(hits));
}

BigCount w_oracle_multi(std::size_t n, std::span<const std::size_t> ks) {
  if (ks.empty()) throw Error(Errc::invalid_argument, "need at least one factor count");
  std::uint64_t hits = 0;
  for_each_dyck(n, [&](const DyckWord& w) {
    for (std::size_t i = 0; i < ks.size(); ++i)
      if (count_factor(w, i + 1) != ks[i]) return;
    ++hits;
  });
  return BigCount(static_cast<unsigned long>(hits));
}

std::map<std::vector<std::size_t>, std::uint64_t> factor_histogram(std::size_t n, std::size_t r) {
  std::map<std::vector<std::size_t>, std::uint64_t> hist;
  std::vector<std::size_t> key(r);
  for_each_dyck(n, [&](const DyckWord& w) {
    for (std::size_t i = 0; i < r; ++i) key[i] = count_factor(w, i + 1);
    ++hist[key];
  });
  return hist;
}

}  // namespace dyck
