#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace dyck {

// An ordered sequence of positive parts. Parts are plain ints: every
// composition this library touches has a total well below 2^31.
class Composition {
 public:
  Composition() = default;
  explicit Composition(std::vector<int> parts);

  // Comma-separated integers, e.g. "1,2,2".
  static Composition parse(std::string_view text);

  const std::vector<int>& parts() const noexcept { return parts_; }
  std::size_t size() const noexcept { return parts_.size(); }
  bool empty() const noexcept { return parts_.empty(); }
  int operator[](std::size_t i) const noexcept { return parts_[i]; }
  int total() const noexcept;

  // Number of parts >= threshold; parts_at_least(2) is the "m" statistic.
  std::size_t parts_at_least(int threshold) const noexcept;

  Composition rotated(std::size_t start) const;
  std::string str() const;

  friend bool operator==(const Composition&, const Composition&) = default;
  friend auto operator<=>(const Composition&, const Composition&) = default;

 private:
  std::vector<int> parts_;
};

// Start index of the lexicographically least rotation (two-pointer minimum
// expression scan, linear time).
std::size_t least_rotation(std::span<const int> seq);

// Rotation class of a composition, stored by its least rotation.
class CyclicComposition {
 public:
  CyclicComposition() = default;
  explicit CyclicComposition(const Composition& any_rotation);

  const Composition& canonical() const noexcept { return canonical_; }
  // Number of distinct rotations; divides size().
  std::size_t order() const noexcept { return order_; }
  bool primitive() const noexcept { return order_ == canonical_.size(); }
  std::size_t size() const noexcept { return canonical_.size(); }
  int total() const noexcept { return canonical_.total(); }
  std::size_t parts_at_least(int threshold) const noexcept {
    return canonical_.parts_at_least(threshold);
  }

  // The order() distinct compositions in the class, canonical first.
  std::vector<Composition> representatives() const;
  bool contains(const Composition& c) const;
  std::string str() const { return "[" + canonical_.str() + "]"; }

  friend bool operator==(const CyclicComposition&, const CyclicComposition&) = default;
  friend auto operator<=>(const CyclicComposition&, const CyclicComposition&) = default;

 private:
  Composition canonical_;
  std::size_t order_ = 0;
};

CyclicComposition cyclic_of(const Composition& c);

struct PrimitiveRoot {
  CyclicComposition root;
  std::size_t copies = 1;
};

// The unique primitive class whose `copies`-fold concatenation is `cc`.
PrimitiveRoot primitive_root(const CyclicComposition& cc);

// Compositions of n into k parts with exactly m parts >= 2, in lexicographic
// order. A negative m means "any number of parts >= 2".
void for_each_composition(int n, int k, int m, const std::function<void(const Composition&)>& visit);
std::vector<Composition> enumerate_compositions(int n, int k, int m);
std::vector<Composition> enumerate_compositions(int n, int k);

// One canonical representative per class, in lexicographic order.
std::vector<CyclicComposition> enumerate_cyclic_compositions(int n, int k, int m);
std::vector<CyclicComposition> enumerate_cyclic_compositions(int n, int k);

}  // namespace dyck
