#include "dyck/trees.hpp"

#include "dyck/error.hpp"

namespace dyck {

std::size_t PlaneTree::vertex_count() const noexcept {
  std::size_t total = 1;
  for (const auto& c : children) total += c.vertex_count();
  return total;
}

namespace {

void write_parens(const PlaneTree& t, std::string& out) {
  for (const auto& c : t.children) {
    out += '(';
    write_parens(c, out);
    out += ')';
  }
}

void write_steps(const PlaneTree& t, StepWord& out) {
  for (const auto& c : t.children) {
    out.push_back(Step::U);
    write_steps(c, out);
    out.push_back(Step::D);
  }
}

}  // namespace

std::string PlaneTree::parens() const {
  std::string out;
  write_parens(*this, out);
  return out;
}

PlaneTree PlaneTree::parse(std::string_view text) {
  StepWord steps = StepWord::parse(text);
  if (!DyckWord::is_dyck(steps)) throw Error(Errc::parse_error, "unbalanced tree string '" + std::string(text) + "'");
  return phi(DyckWord(std::move(steps)));
}

PlaneTree phi(const DyckWord& w) {
  PlaneTree root;
  std::vector<PlaneTree*> stack{&root};
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] == Step::U) {
      PlaneTree* top = stack.back();
      top->children.emplace_back();
      stack.push_back(&top->children.back());
    } else {
      stack.pop_back();
    }
  }
  return root;
}

DyckWord phi_inv(const PlaneTree& t) {
  StepWord out;
  write_steps(t, out);
  return DyckWord(std::move(out));
}

namespace {

void collect_leaves(const PlaneTree& t, bool is_root, LeafStats& acc) {
  for (std::size_t i = 0; i < t.children.size(); ++i) {
    const PlaneTree& c = t.children[i];
    if (c.children.empty()) {
      ++acc.leaves;
      if (i == 0 && !is_root) ++acc.good_leaves;
    } else {
      collect_leaves(c, false, acc);
    }
  }
}

// `chain` is the extended-leaf length accumulated down to `t` (0 at the root).
void collect_extended(const PlaneTree& t, int chain, std::vector<int>& out) {
  for (std::size_t i = 0; i < t.children.size(); ++i) {
    const int here = (i == 0 && chain > 0) ? chain + 1 : 1;
    const PlaneTree& c = t.children[i];
    if (c.children.empty())
      out.push_back(here);
    else
      collect_extended(c, here, out);
  }
}

}  // namespace

LeafStats leaf_stats(const PlaneTree& t) {
  LeafStats s;
  collect_leaves(t, true, s);
  return s;
}

ExtendedLeafSeq extended_leaf_decomposition(const PlaneTree& t) {
  if (t.children.empty()) throw Error(Errc::no_leaves, "single-vertex tree has no extended leaves");
  ExtendedLeafSeq seq;
  collect_extended(t, 0, seq.lengths);
  return seq;
}

std::vector<PlaneTree> all_trees(std::size_t n) {
  std::vector<PlaneTree> out;
  for_each_dyck(n, [&](const DyckWord& w) { out.push_back(phi(w)); });
  return out;
}

PlaneTree path_tree(std::size_t edges) {
  PlaneTree t;
  PlaneTree* cur = &t;
  for (std::size_t i = 0; i < edges; ++i) {
    cur->children.emplace_back();
    cur = &cur->children.back();
  }
  return t;
}

PlaneTree star_tree(std::size_t leaves) {
  PlaneTree t;
  t.children.resize(leaves);
  return t;
}

}  // namespace dyck
