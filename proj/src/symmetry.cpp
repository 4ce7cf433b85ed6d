#include "dyck/symmetry.hpp"

#include "dyck/error.hpp"

namespace dyck {

DyckWord lalanne_kreweras(const DyckWord& w) {
  const std::size_t n = w.semilength();
  if (n == 0) return w;
  // Up steps and down steps are numbered 1..n separately; collect the labels
  // of those followed by a step of the same kind. Double falls set the rise
  // lengths of the image and double rises its fall lengths.
  std::vector<std::size_t> ups{0}, downs{0};
  std::size_t u = 0, d = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    const bool same_next = i + 1 < w.size() && w[i + 1] == w[i];
    if (w[i] == Step::U) {
      ++u;
      if (same_next) ups.push_back(u);
    } else {
      ++d;
      if (same_next) downs.push_back(d);
    }
  }
  ups.push_back(n);
  downs.push_back(n);

  StepWord out;
  for (std::size_t i = 1; i < ups.size(); ++i) {
    for (std::size_t s = downs[i - 1]; s < downs[i]; ++s) out.push_back(Step::U);
    for (std::size_t s = ups[i - 1]; s < ups[i]; ++s) out.push_back(Step::D);
  }
  return DyckWord(std::move(out));
}

SymmetryTrace symmetry_trace(const PlaneTree& t, const NarayanaInvolution& swap) {
  const std::size_t n = t.non_root_count();
  const LeafStats stats = leaf_stats(t);
  if (n % 2 == 0 || stats.leaves == 0 || n != 2 * stats.leaves + 1) {
    throw Error(Errc::bad_profile, "need 2k+1 non-root vertices and k leaves, got " + std::to_string(n) +
                                       " and " + std::to_string(stats.leaves));
  }
  SymmetryTrace tr;
  tr.input = t;
  tr.marked = marked_necklace_from_tree(t);

  const MarkedNecklace ordered = tr.marked.rotated(dominating_start(tr.marked.lengths));
  tr.necklace = ordered.lengths;
  tr.positions = ordered.marks;

  tr.path = comp_to_dyck_plus(Composition(tr.necklace));
  tr.swapped = swap(tr.path);
  if (tr.swapped.semilength() != tr.path.semilength())
    throw Error(Errc::invalid_argument, "involution changed the semilength");

  tr.new_necklace = dyck_plus_sequence(tr.swapped).parts();
  tr.new_marked = MarkedNecklace{tr.new_necklace, tr.positions};
  tr.output = tree_from_marked_necklace(tr.new_marked);
  return tr;
}

PlaneTree symmetry_bijection(const PlaneTree& t, const NarayanaInvolution& swap) {
  return symmetry_trace(t, swap).output;
}

}  // namespace dyck
