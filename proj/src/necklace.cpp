#include "dyck/necklace.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

#include "dyck/error.hpp"

namespace dyck {

int MarkedNecklace::total() const noexcept { return std::accumulate(lengths.begin(), lengths.end(), 0); }

std::vector<std::vector<int>> MarkedNecklace::marks_by_leaf() const {
  std::vector<std::vector<int>> local(lengths.size());
  std::size_t leaf = 0;
  int offset = 0;
  for (int m : marks) {
    while (leaf < lengths.size() && m > offset + lengths[leaf]) offset += lengths[leaf++];
    if (leaf == lengths.size()) throw Error(Errc::bad_marking, "mark " + std::to_string(m) + " out of range");
    local[leaf].push_back(m - offset);
  }
  return local;
}

MarkedNecklace MarkedNecklace::from_marks_by_leaf(std::vector<int> lengths,
                                                  const std::vector<std::vector<int>>& local) {
  MarkedNecklace mn;
  int offset = 0;
  for (std::size_t i = 0; i < lengths.size(); ++i) {
    if (i < local.size())
      for (int p : local[i]) mn.marks.push_back(offset + p);
    offset += lengths[i];
  }
  std::sort(mn.marks.begin(), mn.marks.end());
  mn.lengths = std::move(lengths);
  return mn;
}

MarkedNecklace MarkedNecklace::rotated(std::size_t start) const {
  const std::size_t k = lengths.size();
  if (k == 0) return *this;
  auto local = marks_by_leaf();
  std::vector<int> lens(k);
  std::vector<std::vector<int>> loc(k);
  for (std::size_t i = 0; i < k; ++i) {
    lens[i] = lengths[(start + i) % k];
    loc[i] = local[(start + i) % k];
  }
  return from_marks_by_leaf(std::move(lens), loc);
}

namespace {

using Token = std::pair<int, std::vector<int>>;

std::vector<Token> tokens_of(const MarkedNecklace& mn) {
  auto local = mn.marks_by_leaf();
  std::vector<Token> out;
  for (std::size_t i = 0; i < mn.lengths.size(); ++i) out.emplace_back(mn.lengths[i], std::move(local[i]));
  return out;
}

std::size_t least_token_rotation(const std::vector<Token>& tok) {
  const std::size_t k = tok.size();
  std::size_t best = 0;
  for (std::size_t s = 1; s < k; ++s) {
    for (std::size_t i = 0; i < k; ++i) {
      const Token& a = tok[(s + i) % k];
      const Token& b = tok[(best + i) % k];
      if (a == b) continue;
      if (a < b) best = s;
      break;
    }
  }
  return best;
}

}  // namespace

MarkedNecklace MarkedNecklace::canonical() const {
  if (lengths.empty()) return *this;
  return rotated(least_token_rotation(tokens_of(*this)));
}

void MarkedNecklace::validate() const {
  if (lengths.empty()) throw Error(Errc::bad_marking, "necklace needs at least one extended leaf");
  for (int l : lengths)
    if (l < 1) throw Error(Errc::bad_marking, "extended-leaf lengths must be positive");
  const int n = total();
  for (std::size_t i = 0; i < marks.size(); ++i) {
    if (marks[i] < 1 || marks[i] > n) throw Error(Errc::bad_marking, "mark " + std::to_string(marks[i]) + " out of range");
    if (i && marks[i] <= marks[i - 1]) throw Error(Errc::bad_marking, "marks must be sorted and distinct");
  }
  if (marks.size() + 1 > lengths.size())
    throw Error(Errc::bad_marking, "too many marks: " + std::to_string(marks.size()) + " for " +
                                       std::to_string(lengths.size()) + " extended leaves");
}

std::string MarkedNecklace::str() const {
  std::string s = "(";
  for (std::size_t i = 0; i < lengths.size(); ++i) s += (i ? "," : "") + std::to_string(lengths[i]);
  s += ") marks {";
  for (std::size_t i = 0; i < marks.size(); ++i) s += (i ? "," : "") + std::to_string(marks[i]);
  return s + "}";
}

bool operator==(const MarkedNecklace& a, const MarkedNecklace& b) {
  if (a.lengths.size() != b.lengths.size() || a.marks.size() != b.marks.size()) return false;
  const MarkedNecklace ca = a.canonical(), cb = b.canonical();
  return ca.lengths == cb.lengths && ca.marks == cb.marks;
}

bool operator<(const MarkedNecklace& a, const MarkedNecklace& b) {
  const auto ta = tokens_of(a.canonical()), tb = tokens_of(b.canonical());
  return ta < tb;
}

namespace {

// Flat tree used while gluing extended leaves together.
struct Arena {
  std::vector<std::vector<std::size_t>> children{{}};
  std::vector<std::size_t> depth{0};

  std::size_t add_child(std::size_t parent) {
    children.emplace_back();
    depth.push_back(depth[parent] + 1);
    children[parent].push_back(children.size() - 1);
    return children.size() - 1;
  }

  PlaneTree freeze(std::size_t v) const {
    PlaneTree t;
    t.children.reserve(children[v].size());
    for (std::size_t c : children[v]) t.children.push_back(freeze(c));
    return t;
  }
};

}  // namespace

PlaneTree tree_from_marked_necklace(const MarkedNecklace& mn) {
  mn.validate();
  const std::size_t k = mn.lengths.size();
  const auto local = mn.marks_by_leaf();

  if (mn.marks.size() != k - 1)
    throw Error(Errc::bad_marking, "need exactly " + std::to_string(k - 1) + " marks, got " +
                                       std::to_string(mn.marks.size()));

  std::vector<Bead> beads;
  std::vector<std::size_t> block_start;
  for (std::size_t i = 0; i < k; ++i) {
    block_start.push_back(beads.size());
    beads.insert(beads.end(), local[i].size(), Bead::circle);
    beads.push_back(Bead::square);
  }
  const std::size_t shift = unique_balanced_shift(beads);
  const auto first = std::find(block_start.begin(), block_start.end(), shift);
  if (first == block_start.end()) throw Error(Errc::bad_marking, "balanced shift does not start at a leaf");
  const std::size_t e1 = static_cast<std::size_t>(first - block_start.begin());

  Arena arena;
  std::vector<std::size_t> pending;  // arena vertices carrying an unused mark
  std::size_t top = 0;
  for (std::size_t step = 0; step < k; ++step) {
    const std::size_t leaf = (e1 + step) % k;
    if (step > 0) {
      if (pending.empty()) throw Error(Errc::bad_marking, "ran out of marked vertices");
      auto deepest = std::max_element(pending.begin(), pending.end(),
                                      [&](std::size_t a, std::size_t b) { return arena.depth[a] < arena.depth[b]; });
      top = *deepest;
      pending.erase(deepest);
    }
    std::vector<std::size_t> path{top};
    for (int e = 0; e < mn.lengths[leaf]; ++e) path.push_back(arena.add_child(path.back()));
    for (int p : local[leaf]) pending.push_back(path[static_cast<std::size_t>(p - 1)]);
  }
  return arena.freeze(0);
}

namespace {

struct LeafPath {
  std::vector<const PlaneTree*> vertices;  // top first, leaf last
};

void collect_paths(const PlaneTree& t, std::vector<const PlaneTree*>& chain, std::vector<LeafPath>& out) {
  for (std::size_t i = 0; i < t.children.size(); ++i) {
    const PlaneTree& c = t.children[i];
    // A non-first child (or a child of the root) starts a fresh chain at its parent.
    std::vector<const PlaneTree*> next;
    if (i == 0 && !chain.empty())
      next = chain;
    else
      next = {&t};
    next.push_back(&c);
    if (c.children.empty())
      out.push_back({std::move(next)});
    else
      collect_paths(c, next, out);
  }
}

}  // namespace

MarkedNecklace marked_necklace_from_tree(const PlaneTree& t) {
  if (t.children.empty()) throw Error(Errc::no_leaves, "single-vertex tree has no extended leaves");
  std::vector<LeafPath> paths;
  std::vector<const PlaneTree*> chain;
  collect_paths(t, chain, paths);

  const std::size_t k = paths.size();
  std::vector<int> lengths(k);
  for (std::size_t i = 0; i < k; ++i) lengths[i] = static_cast<int>(paths[i].vertices.size() - 1);

  std::vector<std::vector<int>> local(k);
  for (std::size_t i = k; i-- > 1;) {
    const PlaneTree* v = paths[i].vertices.front();
    bool found = false;
    for (std::size_t j = i; j-- > 0 && !found;) {
      const auto& vs = paths[j].vertices;
      auto it = std::find(vs.begin(), vs.end(), v);
      if (it != vs.end()) {
        local[j].push_back(static_cast<int>(it - vs.begin()) + 1);
        found = true;
      }
    }
    if (!found) throw Error(Errc::bad_marking, "extended leaf shares no vertex with an earlier one");
  }
  for (auto& l : local) std::sort(l.begin(), l.end());
  return MarkedNecklace::from_marks_by_leaf(std::move(lengths), local);
}

namespace {

StepWord run_word(const std::vector<int>& parts) {
  StepWord w;
  for (int p : parts) {
    for (int i = 1; i < p; ++i) w.push_back(Step::U);
    w.push_back(Step::D);
  }
  return w;
}

void require_shape(const std::vector<int>& parts, long target, const char* what) {
  const long sum = std::accumulate(parts.begin(), parts.end(), 0L);
  if (sum != target) {
    throw Error(Errc::bad_shape, std::string(what) + ": composition of " + std::to_string(sum) + " into " +
                                     std::to_string(parts.size()) + " parts, expected total " +
                                     std::to_string(target));
  }
}

// a_i = number of U steps directly before the i-th D.
std::vector<int> ups_before_downs(const StepWord& w) {
  std::vector<int> a;
  int run = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] == Step::U) {
      ++run;
    } else {
      a.push_back(run);
      run = 0;
    }
  }
  return a;
}

}  // namespace

std::size_t dominating_start(const std::vector<int>& lengths) {
  require_shape(lengths, 2 * static_cast<long>(lengths.size()) + 1, "dominating order");
  const StepWord w = run_word(lengths);
  const auto shifts = dominating_shifts(w, 1);
  if (shifts.size() != 1) throw Error(Errc::bad_shape, "expected a unique dominating rotation");
  // Map the step index back to a part index; the shift starts right after a D.
  std::size_t part = 0;
  for (std::size_t i = 0; i < shifts.front(); ++i)
    if (w[i] == Step::D) ++part;
  return part % lengths.size();
}

DyckWord comp_to_dyck_plus(const Composition& any_rotation) {
  const auto& parts = any_rotation.parts();
  require_shape(parts, 2 * static_cast<long>(parts.size()) + 1, "plus map");
  const StepWord w = run_word(parts);
  const auto shifts = dominating_shifts(w, 1);
  if (shifts.size() != 1) throw Error(Errc::bad_shape, "expected a unique dominating rotation");
  const StepWord rot = w.rotated(shifts.front());
  return DyckWord(rot.slice(1, rot.size() - 1));
}

Composition dyck_plus_sequence(const DyckWord& w) {
  if (w.empty()) throw Error(Errc::empty_word, "plus map needs a nonempty Dyck word");
  std::vector<int> a = ups_before_downs(w.steps());
  a[0] += 2;
  for (std::size_t i = 1; i < a.size(); ++i) a[i] += 1;
  return Composition(std::move(a));
}

CyclicComposition comp_from_dyck_plus(const DyckWord& w) { return cyclic_of(dyck_plus_sequence(w)); }

DyckWord comp_to_dyck_minus(const Composition& any_rotation) {
  const auto& parts = any_rotation.parts();
  require_shape(parts, 2 * static_cast<long>(parts.size()) - 1, "minus map");
  const StepWord w = run_word(parts);
  std::vector<Bead> beads(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) beads[i] = w[i] == Step::U ? Bead::circle : Bead::square;
  const StepWord rot = w.rotated(unique_balanced_shift(beads));
  return DyckWord(rot.slice(0, rot.size() - 1));
}

CyclicComposition comp_from_dyck_minus(const DyckWord& w) {
  StepWord s = w.steps();
  s.push_back(Step::D);
  std::vector<int> a = ups_before_downs(s);
  for (int& x : a) x += 1;
  return cyclic_of(Composition(std::move(a)));
}

std::vector<StepWord> elevated_class(const StepWord& w, std::size_t r) {
  StepWord uw;
  uw.push_back(Step::U);
  uw.append(w);
  std::vector<StepWord> out;
  for (std::size_t s = 0; s < uw.size(); ++s) {
    if (uw[s] != Step::U) continue;
    const StepWord rot = uw.rotated(s);
    StepWord tail = rot.slice(1, rot.size() - 1);
    if (is_elevated_path(tail, r)) out.push_back(std::move(tail));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

GenPathClass phi_jk(const CyclicComposition& cc, std::size_t j) {
  const auto& parts = cc.canonical().parts();
  if (j < 1) throw Error(Errc::bad_shape, "phi_jk needs j >= 1");
  require_shape(parts, 2 * static_cast<long>(parts.size()) + static_cast<long>(j), "phi_jk");
  const StepWord w = run_word(parts);
  GenPathClass out;
  for (const StepWord& rot : distinct_dominating_rotations(w, 1)) out.members.push_back(rot.slice(1, rot.size() - 1));
  std::sort(out.members.begin(), out.members.end());
  out.members.erase(std::unique(out.members.begin(), out.members.end()), out.members.end());
  out.representative = out.members.front();
  return out;
}

}  // namespace dyck
