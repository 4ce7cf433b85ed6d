#pragma once

// Brute-force reference counts built from plain strings. Nothing here calls
// into the library, so agreement with it is an independent check.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace oracle {

inline void dyck_strings(int n, const std::function<void(const std::string&)>& visit) {
  std::string s;
  std::function<void(int, int)> rec = [&](int up, int down) {
    if (up == n && down == n) {
      visit(s);
      return;
    }
    if (up < n) {
      s.push_back('U');
      rec(up + 1, down);
      s.pop_back();
    }
    if (down < up) {
      s.push_back('D');
      rec(up, down + 1);
      s.pop_back();
    }
  };
  rec(0, 0);
}

inline std::vector<std::string> all_dyck(int n) {
  std::vector<std::string> out;
  dyck_strings(n, [&](const std::string& s) { out.push_back(s); });
  return out;
}

inline bool is_dyck(const std::string& s) {
  int h = 0;
  for (char c : s) {
    h += c == 'U' ? 1 : -1;
    if (h < 0) return false;
  }
  return h == 0;
}

// Occurrences of U^r D as a substring.
inline int occurrences(const std::string& s, int r) {
  const std::string pat = std::string(static_cast<std::size_t>(r), 'U') + "D";
  int c = 0;
  for (std::size_t p = s.find(pat); p != std::string::npos; p = s.find(pat, p + 1)) ++c;
  return c;
}

// (count of UD, count of UUD, ...) up to r -> number of semilength-n words.
inline std::map<std::vector<int>, std::uint64_t> histogram(int n, int r) {
  std::map<std::vector<int>, std::uint64_t> h;
  dyck_strings(n, [&](const std::string& s) {
    std::vector<int> key;
    for (int i = 1; i <= r; ++i) key.push_back(occurrences(s, i));
    ++h[key];
  });
  return h;
}

inline std::uint64_t w(int n, int k, int m) {
  std::uint64_t c = 0;
  dyck_strings(n, [&](const std::string& s) { c += occurrences(s, 1) == k && occurrences(s, 2) == m; });
  return c;
}

inline std::vector<int> rises(const std::string& s) {
  std::vector<int> out;
  int run = 0;
  for (char c : s) {
    if (c == 'U') {
      ++run;
    } else if (run) {
      out.push_back(run);
      run = 0;
    }
  }
  return out;
}

// Smallest rotation by trying all of them.
template <class T>
std::vector<T> min_rotation(const std::vector<T>& v) {
  std::vector<T> best = v;
  for (std::size_t i = 1; i < v.size(); ++i) {
    std::vector<T> r(v.begin() + static_cast<long>(i), v.end());
    r.insert(r.end(), v.begin(), v.begin() + static_cast<long>(i));
    best = std::min(best, r);
  }
  return best;
}

inline void compositions(int n, int k, const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> parts;
  std::function<void(int)> rec = [&](int left) {
    if (static_cast<int>(parts.size()) == k) {
      if (left == 0) visit(parts);
      return;
    }
    for (int p = 1; p <= left; ++p) {
      parts.push_back(p);
      rec(left - p);
      parts.pop_back();
    }
  };
  if (k == 0) {
    if (n == 0) visit(parts);
    return;
  }
  rec(n);
}

inline int parts_at_least_two(const std::vector<int>& c) {
  return static_cast<int>(std::count_if(c.begin(), c.end(), [](int p) { return p >= 2; }));
}

// Rotation classes of compositions of n into k parts with m parts >= 2.
inline std::set<std::vector<int>> cyclic_classes(int n, int k, int m) {
  std::set<std::vector<int>> out;
  compositions(n, k, [&](const std::vector<int>& c) {
    if (m < 0 || parts_at_least_two(c) == m) out.insert(min_rotation(c));
  });
  return out;
}

inline int distinct_rotations(const std::vector<int>& c) {
  std::set<std::vector<int>> rots;
  for (std::size_t i = 0; i < c.size(); ++i) {
    std::vector<int> r(c.begin() + static_cast<long>(i), c.end());
    r.insert(r.end(), c.begin(), c.begin() + static_cast<long>(i));
    rots.insert(r);
  }
  return static_cast<int>(rots.size());
}

// Paths with n U and n-r D that never dip below the start; keyed by UD count.
inline std::map<int, std::uint64_t> elevated_peaks(int n, int r) {
  std::map<int, std::uint64_t> h;
  std::string s;
  std::function<void(int, int)> rec = [&](int up, int down) {
    if (up == n && down == n - r) {
      ++h[occurrences(s, 1)];
      return;
    }
    if (up < n) {
      s.push_back('U');
      rec(up + 1, down);
      s.pop_back();
    }
    if (down < n - r && down < up) {
      s.push_back('D');
      rec(up, down + 1);
      s.pop_back();
    }
  };
  rec(0, 0);
  return h;
}

// Small exact integer helpers for closed forms in tests (values fit easily).
inline std::uint64_t choose(long n, long k) {
  if (n == -1 && k == -1) return 1;
  if (k < 0 || n < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (long i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

}  // namespace oracle
