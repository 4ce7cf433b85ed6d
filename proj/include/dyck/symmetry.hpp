#pragma once

#include <functional>
#include <vector>

#include "dyck/compositions.hpp"
#include "dyck/necklace.hpp"
#include "dyck/trees.hpp"
#include "dyck/words.hpp"

namespace dyck {

// Involution on semilength-k Dyck words sending m peaks to k+1-m peaks,
// built from the ascent/descent position sets.
DyckWord lalanne_kreweras(const DyckWord& w);

using NarayanaInvolution = std::function<DyckWord(const DyckWord&)>;

struct SymmetryTrace {
  PlaneTree input;
  MarkedNecklace marked;          // M, in the tree's leaf order
  std::vector<int> necklace;      // N, in dominating order
  std::vector<int> positions;     // S
  DyckWord path;                  // P
  DyckWord swapped;               // P'
  std::vector<int> new_necklace;  // N', in dominating order
  MarkedNecklace new_marked;      // M'
  PlaneTree output;               // T'
};

// Trees with 2k+1 non-root vertices and k leaves, m good leaves, to trees of
// the same shape with k+1-m good leaves. Throws BadProfile on other shapes.
SymmetryTrace symmetry_trace(const PlaneTree& t, const NarayanaInvolution& swap = lalanne_kreweras);
PlaneTree symmetry_bijection(const PlaneTree& t, const NarayanaInvolution& swap = lalanne_kreweras);

}  // namespace dyck
