#include "dyck/compositions.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "dyck/error.hpp"

namespace dyck {

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw Error(Errc::invalid_argument, "composition needs at least one part");
  for (int p : parts_) {
    if (p < 1) throw Error(Errc::invalid_argument, "composition parts must be positive");
  }
}

Composition Composition::parse(std::string_view text) {
  std::vector<int> parts;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view tok = text.substr(pos, comma - pos);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    int value = 0;
    auto [end, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || end != tok.data() + tok.size() || tok.empty()) {
      throw Error(Errc::parse_error, "bad composition part '" + std::string(tok) + "'");
    }
    parts.push_back(value);
    pos = comma + 1;
  }
  return Composition(std::move(parts));
}

int Composition::total() const noexcept { return std::accumulate(parts_.begin(), parts_.end(), 0); }

std::size_t Composition::parts_at_least(int threshold) const noexcept {
  return static_cast<std::size_t>(
      std::count_if(parts_.begin(), parts_.end(), [&](int p) { return p >= threshold; }));
}

Composition Composition::rotated(std::size_t start) const {
  std::vector<int> out(parts_.size());
  for (std::size_t i = 0; i < parts_.size(); ++i) out[i] = parts_[(start + i) % parts_.size()];
  Composition c;
  c.parts_ = std::move(out);
  return c;
}

std::string Composition::str() const {
  std::string s;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts_[i]);
  }
  return s;
}

std::size_t least_rotation(std::span<const int> seq) {
  const std::size_t n = seq.size();
  if (n == 0) return 0;
  std::size_t i = 0, j = 1, k = 0;
  while (i < n && j < n && k < n) {
    int a = seq[(i + k) % n];
    int b = seq[(j + k) % n];
    if (a == b) {
      ++k;
      continue;
    }
    if (a > b)
      i += k + 1;
    else
      j += k + 1;
    if (i == j) ++j;
    k = 0;
  }
  return std::min(i, j);
}

CyclicComposition::CyclicComposition(const Composition& any_rotation) {
  if (any_rotation.empty()) throw Error(Errc::invalid_argument, "empty composition");
  canonical_ = any_rotation.rotated(least_rotation(any_rotation.parts()));
  const std::size_t k = canonical_.size();
  order_ = k;
  for (std::size_t p = 1; p < k; ++p) {
    if (k % p != 0) continue;
    bool periodic = true;
    for (std::size_t i = 0; i + p < k && periodic; ++i) periodic = canonical_[i] == canonical_[i + p];
    if (periodic) {
      order_ = p;
      break;
    }
  }
}

std::vector<Composition> CyclicComposition::representatives() const {
  std::vector<Composition> out;
  out.reserve(order_);
  for (std::size_t s = 0; s < order_; ++s) out.push_back(canonical_.rotated(s));
  return out;
}

bool CyclicComposition::contains(const Composition& c) const {
  return c.size() == size() && cyclic_of(c) == *this;
}

CyclicComposition cyclic_of(const Composition& c) { return CyclicComposition(c); }

PrimitiveRoot primitive_root(const CyclicComposition& cc) {
  const auto& parts = cc.canonical().parts();
  std::vector<int> head(parts.begin(), parts.begin() + static_cast<std::ptrdiff_t>(cc.order()));
  return {cyclic_of(Composition(std::move(head))), cc.size() / cc.order()};
}

namespace {

void compositions_rec(int remaining, int parts_left, int big_left, std::vector<int>& cur,
                      const std::function<void(const Composition&)>& visit) {
  if (parts_left == 0) {
    if (remaining == 0 && big_left <= 0) visit(Composition(cur));
    return;
  }
  // big_left < 0 means the number of parts >= 2 is unconstrained.
  for (int p = 1; p <= remaining - (parts_left - 1); ++p) {
    const bool big = p >= 2;
    int next_big = big_left;
    if (big_left >= 0) {
      if (big) {
        if (big_left == 0) break;
        next_big = big_left - 1;
      }
      if (next_big > parts_left - 1) continue;
      if (remaining - p < (parts_left - 1) + next_big) {
        if (big) break;
        continue;
      }
    }
    cur.push_back(p);
    compositions_rec(remaining - p, parts_left - 1, next_big, cur, visit);
    cur.pop_back();
  }
}

}  // namespace

void for_each_composition(int n, int k, int m, const std::function<void(const Composition&)>& visit) {
  if (n < 1 || k < 1 || k > n) return;
  if (m > k) return;
  std::vector<int> cur;
  cur.reserve(static_cast<std::size_t>(k));
  compositions_rec(n, k, m, cur, visit);
}

std::vector<Composition> enumerate_compositions(int n, int k, int m) {
  std::vector<Composition> out;
  for_each_composition(n, k, m, [&](const Composition& c) { out.push_back(c); });
  return out;
}

std::vector<Composition> enumerate_compositions(int n, int k) { return enumerate_compositions(n, k, -1); }

std::vector<CyclicComposition> enumerate_cyclic_compositions(int n, int k, int m) {
  std::vector<CyclicComposition> out;
  for_each_composition(n, k, m, [&](const Composition& c) {
    CyclicComposition cc = cyclic_of(c);
    if (cc.canonical() == c) out.push_back(std::move(cc));
  });
  return out;
}

std::vector<CyclicComposition> enumerate_cyclic_compositions(int n, int k) {
  return enumerate_cyclic_compositions(n, k, -1);
}

}  // namespace dyck
