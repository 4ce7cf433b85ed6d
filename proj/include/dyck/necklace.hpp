#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "dyck/compositions.hpp"
#include "dyck/trees.hpp"
#include "dyck/words.hpp"

namespace dyck {

// A cyclic sequence of extended leaves with some non-leaf vertices marked.
// `lengths` fixes one rotation. Non-leaf vertices are numbered 1..n: leaf
// after leaf in that rotation, top vertex first within each leaf. Equality
// ignores the rotation.
struct MarkedNecklace {
  std::vector<int> lengths;
  std::vector<int> marks;  // sorted, distinct, each in 1..sum(lengths)

  int total() const noexcept;
  std::size_t leaves() const noexcept { return lengths.size(); }

  // Marks of leaf i as 1-based positions within that leaf.
  std::vector<std::vector<int>> marks_by_leaf() const;
  static MarkedNecklace from_marks_by_leaf(std::vector<int> lengths, const std::vector<std::vector<int>>& local);

  MarkedNecklace rotated(std::size_t start) const;
  // Lexicographically least rotation of the per-leaf (length, local marks) tokens.
  MarkedNecklace canonical() const;
  // Throws BadMarking when lengths or marks are malformed.
  void validate() const;

  std::string str() const;

  friend bool operator==(const MarkedNecklace& a, const MarkedNecklace& b);
  friend bool operator<(const MarkedNecklace& a, const MarkedNecklace& b);
};

// Glues the leaves together starting from the balanced rotation. Needs
// exactly k-1 marks; throws BadMarking otherwise.
PlaneTree tree_from_marked_necklace(const MarkedNecklace& mn);

// Reads the marking off the tree, lengths in left-to-right leaf order.
// Throws NoLeaves on the single-vertex tree.
MarkedNecklace marked_necklace_from_tree(const PlaneTree& t);

// Rotation start making U^{l_1-1} D ... U^{l_k-1} D 1-dominating; requires the
// lengths to sum to 2k+1. Throws BadShape.
std::size_t dominating_start(const std::vector<int>& lengths);

// Cyclic compositions of 2k+1 into k parts <-> semilength-k Dyck words.
DyckWord comp_to_dyck_plus(const Composition& any_rotation);
inline DyckWord comp_to_dyck_plus(const CyclicComposition& cc) { return comp_to_dyck_plus(cc.canonical()); }
// The composition in its dominating rotation. Throws EmptyWord.
Composition dyck_plus_sequence(const DyckWord& w);
CyclicComposition comp_from_dyck_plus(const DyckWord& w);

// Cyclic compositions of 2k-1 into k parts <-> semilength-(k-1) Dyck words.
DyckWord comp_to_dyck_minus(const Composition& any_rotation);
inline DyckWord comp_to_dyck_minus(const CyclicComposition& cc) { return comp_to_dyck_minus(cc.canonical()); }
CyclicComposition comp_from_dyck_minus(const DyckWord& w);

// Class of elevated paths reached from a composition of 2k+j into k parts.
struct GenPathClass {
  StepWord representative;       // least member
  std::vector<StepWord> members;  // sorted, distinct
  std::size_t order() const noexcept { return members.size(); }
};
GenPathClass phi_jk(const CyclicComposition& cc, std::size_t j);

// Class of an elevated path: all w' with U w' a rotation of U w that stay
// elevated paths of the same shape.
std::vector<StepWord> elevated_class(const StepWord& w, std::size_t r);

}  // namespace dyck
