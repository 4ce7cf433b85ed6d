#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "dyck/words.hpp"

namespace dyck {

// Rooted plane tree; vertices are identified by preorder position.
struct PlaneTree {
  std::vector<PlaneTree> children;

  std::size_t vertex_count() const noexcept;
  std::size_t non_root_count() const noexcept { return vertex_count() - 1; }

  // One "(...)" pair per non-root vertex, in preorder.
  std::string parens() const;
  // Accepts either the parenthesis form or a U/D word.
  static PlaneTree parse(std::string_view text);

  friend bool operator==(const PlaneTree&, const PlaneTree&) = default;
  friend std::strong_ordering operator<=>(const PlaneTree& a, const PlaneTree& b) {
    return a.children <=> b.children;
  }
};

PlaneTree phi(const DyckWord& w);
DyckWord phi_inv(const PlaneTree& t);

struct LeafStats {
  std::size_t leaves = 0;
  std::size_t good_leaves = 0;
  friend bool operator==(const LeafStats&, const LeafStats&) = default;
};
LeafStats leaf_stats(const PlaneTree& t);

struct ExtendedLeafSeq {
  std::vector<int> lengths;
  friend bool operator==(const ExtendedLeafSeq&, const ExtendedLeafSeq&) = default;
};

// Throws NoLeaves on the single-vertex tree.
ExtendedLeafSeq extended_leaf_decomposition(const PlaneTree& t);

// Every plane tree with n non-root vertices, in the order of enumerate_dyck(n).
std::vector<PlaneTree> all_trees(std::size_t n);

PlaneTree path_tree(std::size_t edges);
PlaneTree star_tree(std::size_t leaves);

}  // namespace dyck
