#include "dyck/verify.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <random>
#include <set>

#include "dyck/compositions.hpp"
#include "dyck/counting.hpp"
#include "dyck/error.hpp"
#include "dyck/families.hpp"
#include "dyck/necklace.hpp"
#include "dyck/roots.hpp"
#include "dyck/series.hpp"
#include "dyck/symmetry.hpp"
#include "dyck/trees.hpp"
#include "dyck/words.hpp"

namespace dyck {

namespace {

using json = nlohmann::json;

class Tally {
 public:
  explicit Tally(std::string name) { r_.name = std::move(name); }

  // `why` is only evaluated for the first failure.
  template <class Why>
  void expect(bool ok, Why&& why) {
    if (ok) {
      ++r_.passed;
      return;
    }
    if (!r_.counterexample) r_.counterexample = why();
    ++r_.failed;
  }

  // Runs `body`, turning a library error into a failed instance.
  template <class Body, class Why>
  void guarded(Body&& body, Why&& why) {
    try {
      body(*this);
    } catch (const Error& e) {
      expect(false, [&] {
        json j = why();
        j["error"] = e.what();
        return j;
      });
    }
  }

  CheckResult result() && { return std::move(r_); }

 private:
  CheckResult r_;
};

std::string big(const BigCount& v) { return v.get_str(); }

json counts_json(const std::vector<std::size_t>& ks) { return json(ks); }

// Non-increasing tuples k_1 >= ... >= k_r >= 0 with k_1 <= top.
void for_each_chain(std::size_t r, std::size_t top, std::vector<std::size_t>& cur,
                    const std::function<void(const std::vector<std::size_t>&)>& visit) {
  if (cur.size() == r) {
    visit(cur);
    return;
  }
  const std::size_t hi = cur.empty() ? top : cur.back();
  for (std::size_t v = 0; v <= hi; ++v) {
    cur.push_back(v);
    for_each_chain(r, top, cur, visit);
    cur.pop_back();
  }
}

std::vector<long> to_long(const std::vector<std::size_t>& v) { return {v.begin(), v.end()}; }

// ---------------------------------------------------------------- oracle

void oracle_suite(long n_max, std::vector<CheckResult>& out) {
  {
    Tally t("w_formula matches enumeration");
    for (long n = 0; n <= n_max; ++n) {
      const auto hist = factor_histogram(static_cast<std::size_t>(n), 2);
      for (long k = 0; k <= n; ++k) {
        for (long m = 0; m <= k; ++m) {
          const auto it = hist.find({static_cast<std::size_t>(k), static_cast<std::size_t>(m)});
          const BigCount expected = it == hist.end() ? BigCount(0) : BigCount(static_cast<unsigned long>(it->second));
          const BigCount got = w_formula(n, k, m);
          t.expect(got == expected, [&] {
            return json{{"n", n}, {"k", k}, {"m", m}, {"formula", big(got)}, {"enumeration", big(expected)}};
          });
        }
      }
      // Nothing outside the scanned range may occur.
      for (const auto& [key, count] : hist) {
        t.expect(key[1] <= key[0], [&] { return json{{"n", n}, {"unexpected", counts_json(key)}}; });
      }
    }
    out.push_back(std::move(t).result());
  }
  {
    Tally t("w_formula_multi matches enumeration");
    const long top = std::min(n_max, 10L);
    for (long n = 0; n <= top; ++n) {
      for (std::size_t r = 1; r <= 4; ++r) {
        const auto hist = factor_histogram(static_cast<std::size_t>(n), r);
        std::vector<std::size_t> cur;
        for_each_chain(r, static_cast<std::size_t>(n), cur, [&](const std::vector<std::size_t>& ks) {
          const auto it = hist.find(ks);
          const BigCount expected = it == hist.end() ? BigCount(0) : BigCount(static_cast<unsigned long>(it->second));
          const auto lks = to_long(ks);
          const BigCount got = w_formula_multi(n, lks);
          t.expect(got == expected, [&] {
            return json{{"n", n}, {"ks", counts_json(ks)}, {"formula", big(got)}, {"enumeration", big(expected)}};
          });
        });
      }
    }
    out.push_back(std::move(t).result());
  }
  {
    Tally t("generalized Narayana matches path enumeration");
    const long top = std::min(n_max, 8L);
    for (long n = 0; n <= top; ++n) {
      for (long r = 0; r <= n; ++r) {
        std::map<std::size_t, unsigned long> peaks;
        for_each_elevated_path(static_cast<std::size_t>(n), static_cast<std::size_t>(r),
                               [&](const StepWord& s) { ++peaks[count_factor(s, 1)]; });
        for (long k = 0; k <= n; ++k) {
          const BigCount expected = peaks.count(static_cast<std::size_t>(k)) ? peaks[static_cast<std::size_t>(k)] : 0UL;
          const BigCount got = k <= n - r ? gen_narayana(n, k, r) : BigCount(0);
          t.expect(got == expected, [&] {
            return json{{"n", n}, {"k", k}, {"r", r}, {"formula", big(got)}, {"enumeration", big(expected)}};
          });
        }
      }
    }
    out.push_back(std::move(t).result());
  }
}

// ------------------------------------------------------------ bijections

void bijection_suite(long n_max, std::vector<CheckResult>& out) {
  {
    Tally t("tree correspondence round trips");
    for (long n = 0; n <= n_max; ++n) {
      for_each_dyck(static_cast<std::size_t>(n), [&](const DyckWord& w) {
        t.guarded(
            [&](Tally& tt) {
              const PlaneTree tree = phi(w);
              tt.expect(phi_inv(tree) == w, [&] { return json{{"word", w.str()}, {"issue", "phi_inv(phi(w)) != w"}}; });
              const LeafStats ls = leaf_stats(tree);
              const LeafStats want{count_factor(w, 1), count_factor(w, 2)};
              tt.expect(ls == want, [&] {
                return json{{"word", w.str()}, {"leaves", ls.leaves}, {"good_leaves", ls.good_leaves},
                            {"UD", want.leaves}, {"UUD", want.good_leaves}};
              });
              if (n == 0) return;
              const auto ext = extended_leaf_decomposition(tree);
              tt.expect(ext.lengths == rise_composition(w).parts(),
                        [&] { return json{{"word", w.str()}, {"issue", "extended leaves differ from rises"}}; });
              const MarkedNecklace mn = marked_necklace_from_tree(tree);
              tt.expect(tree_from_marked_necklace(mn) == tree,
                        [&] { return json{{"word", w.str()}, {"marked", mn.str()}, {"issue", "necklace rebuild"}}; });
            },
            [&] { return json{{"word", w.str()}}; });
      });
    }
    out.push_back(std::move(t).result());
  }
  {
    Tally t("trees per necklace");
    for (long k = 1; 2 * k + 1 <= n_max; ++k) {
      std::map<CyclicComposition, long> fiber;
      for (const PlaneTree& tree : all_trees(static_cast<std::size_t>(2 * k + 1))) {
        if (leaf_stats(tree).leaves != static_cast<std::size_t>(k)) continue;
        ++fiber[cyclic_of(Composition(extended_leaf_decomposition(tree).lengths))];
      }
      const auto classes = enumerate_cyclic_compositions(static_cast<int>(2 * k + 1), static_cast<int>(k));
      t.expect(fiber.size() == classes.size(), [&] {
        return json{{"k", k}, {"necklaces_seen", fiber.size()}, {"cyclic_compositions", classes.size()}};
      });
      const BigCount want = binomial(2 * k + 1, k - 1);
      for (const auto& [cc, count] : fiber) {
        t.expect(BigCount(count) == want,
                 [&] { return json{{"k", k}, {"necklace", cc.str()}, {"trees", count}, {"expected", big(want)}}; });
      }
    }
    out.push_back(std::move(t).result());
  }
  {
    Tally t("marked necklaces and rise classes");
    for (long n = 1; n <= n_max; ++n) {
      std::map<CyclicComposition, long> dyck_by_class;
      for_each_dyck(static_cast<std::size_t>(n),
                    [&](const DyckWord& w) { ++dyck_by_class[cyclic_of(rise_composition(w))]; });
      for (long k = 1; k <= n; ++k) {
        for (const auto& cc : enumerate_cyclic_compositions(static_cast<int>(n), static_cast<int>(k))) {
          std::set<MarkedNecklace> seen;
          std::vector<int> marks;
          std::function<void(int)> choose = [&](int next) {
            if (static_cast<long>(marks.size()) == k - 1) {
              seen.insert(MarkedNecklace{cc.canonical().parts(), marks}.canonical());
              return;
            }
            for (int v = next; v <= n; ++v) {
              marks.push_back(v);
              choose(v + 1);
              marks.pop_back();
            }
          };
          choose(1);
          const BigCount want = exact_div(BigCount(static_cast<unsigned long>(cc.order())) * binomial(n, k - 1), k,
                                          "marked necklace count");
          const long dyck = dyck_by_class.count(cc) ? dyck_by_class[cc] : 0;
          t.expect(BigCount(static_cast<unsigned long>(seen.size())) == want && BigCount(dyck) == want, [&] {
            return json{{"class", cc.str()}, {"markings", seen.size()}, {"dyck_words", dyck}, {"formula", big(want)}};
          });
        }
      }
    }
    out.push_back(std::move(t).result());
  }
  {
    Tally t("symmetry bijection on fibers");
    for (long k = 1; 2 * k + 1 <= n_max; ++k) {
      std::set<PlaneTree> inputs, outputs;
      for (const PlaneTree& tree : all_trees(static_cast<std::size_t>(2 * k + 1))) {
        const LeafStats ls = leaf_stats(tree);
        if (ls.leaves != static_cast<std::size_t>(k)) continue;
        inputs.insert(tree);
        t.guarded(
            [&](Tally& tt) {
              const PlaneTree img = symmetry_bijection(tree);
              const LeafStats is = leaf_stats(img);
              tt.expect(img.non_root_count() == tree.non_root_count() && is.leaves == ls.leaves &&
                            is.good_leaves == static_cast<std::size_t>(k) + 1 - ls.good_leaves,
                        [&] {
                          return json{{"tree", tree.parens()}, {"image", img.parens()},
                                      {"good_in", ls.good_leaves}, {"good_out", is.good_leaves}};
                        });
              outputs.insert(img);
            },
            [&] { return json{{"tree", tree.parens()}}; });
      }
      t.expect(inputs == outputs, [&] {
        return json{{"k", k}, {"fiber", inputs.size()}, {"distinct_images", outputs.size()},
                    {"issue", "image is not the whole fiber"}};
      });
    }
    out.push_back(std::move(t).result());
  }
  {
    Tally t("worked symmetry example");
    t.guarded(
        [&](Tally& tt) {
          const SymmetryTrace tr = symmetry_trace(PlaneTree::parse("UUUDDUDDUUUDDDUUDD"));
          tt.expect(tr.necklace == std::vector<int>{3, 2, 3, 1} && tr.positions == std::vector<int>{1, 6, 7} &&
                        tr.path.str() == "UDUDUUDD" && tr.swapped.str() == "UUUDDDUD" &&
                        tr.new_necklace == std::vector<int>{5, 1, 1, 2} &&
                        phi_inv(tr.output).str() == "UUUUUDDDDDUDUDUUDD",
                    [&] {
                      return json{{"path", tr.path.str()}, {"swapped", tr.swapped.str()},
                                  {"output", phi_inv(tr.output).str()}};
                    });
        },
        [] { return json{{"input", "UUUDDUDDUUUDDDUUDD"}}; });
    out.push_back(std::move(t).result());
  }
}

// ------------------------------------------------------------ identities

void identity_suite(long n_max, std::vector<CheckResult>& out) {
  {
    Tally t("w-numbers versus Narayana numbers");
    for (long k = 1; k <= n_max; ++k)
      for (long j = 0; j <= 4; ++j)
        for (long m = 0; m <= k; ++m)
          for (const Identity& id : w_identities(k, m, j)) {
            t.expect(id.holds(), [&] {
              return json{{"identity", id.name}, {"k", k}, {"m", m}, {"j", j}, {"lhs", big(id.lhs)}, {"rhs", big(id.rhs)}};
            });
          }
    out.push_back(std::move(t).result());
  }
  {
    Tally t("Catalan from primitive classes");
    for (long n = 1; n <= n_max; ++n) {
      const BigCount got = catalan_via_primitive(n), want = catalan(n);
      t.expect(got == want, [&] { return json{{"n", n}, {"sum", big(got)}, {"catalan", big(want)}}; });
    }
    out.push_back(std::move(t).result());
  }
  {
    Tally t("cyclic composition counts");
    auto compare = [&](long total, long k, long m, long j, Sign sign, const char* tag) {
      const BigCount got = ccomp_count(k, m, j, sign);
      const std::size_t want =
          enumerate_cyclic_compositions(static_cast<int>(total), static_cast<int>(k), static_cast<int>(m)).size();
      t.expect(got == BigCount(static_cast<unsigned long>(want)), [&] {
        return json{{"sign", tag}, {"k", k}, {"m", m}, {"j", j}, {"formula", big(got)}, {"enumeration", want}};
      });
    };
    for (long k = 1; k <= n_max; ++k) {
      for (long m = 0; m <= k; ++m) {
        for (long j = 1; 2 * k + j <= n_max; ++j) compare(2 * k + j, k, m, j, Sign::plus, "plus");
        if (2 * k <= n_max) compare(2 * k, k, m, 0, Sign::zero, "zero");
        for (long j = std::max(1L, 2 * k - n_max); j <= k; ++j) compare(2 * k - j, k, m, j, Sign::minus, "minus");
      }
    }
    out.push_back(std::move(t).result());
  }
  {
    Tally t("multi-factor symmetry");
    for (long r = 2; r <= 4; ++r) {
      for (long k = 1; k <= 6; ++k) {
        for (long m = 1; m <= k; ++m) {
          std::vector<long> a(static_cast<std::size_t>(r - 1), k), b = a;
          a.push_back(m);
          b.push_back(k + 1 - m);
          const BigCount x = w_formula_multi(r * k + 1, a), y = w_formula_multi(r * k + 1, b);
          t.expect(x == y, [&] { return json{{"n", r * k + 1}, {"r", r}, {"k", k}, {"m", m}, {"lhs", big(x)}, {"rhs", big(y)}}; });
          if (k < 2) continue;  // 2k-1 = k at k = 1 falls under the n = k case
          a.back() = m;
          b.back() = k - m;
          const BigCount u = w_formula_multi(r * k - 1, a), v = w_formula_multi(r * k - 1, b);
          t.expect(u == v, [&] { return json{{"n", r * k - 1}, {"r", r}, {"k", k}, {"m", m}, {"lhs", big(u)}, {"rhs", big(v)}}; });
        }
      }
    }
    out.push_back(std::move(t).result());
  }
  {
    Tally t("reflection ratio");
    for (long n = 2; n <= n_max; ++n)
      for (long k = 1; k <= n - 1; ++k)
        for (long m = 0; m <= k; ++m) {
          const BigCount lhs = w_formula(n, k, m) * ((n - k) * (n - k + 1));
          const BigCount rhs = w_formula(n, n - k, m) * (k * (k + 1));
          t.expect(lhs == rhs, [&] { return json{{"n", n}, {"k", k}, {"m", m}}; });
        }
    out.push_back(std::move(t).result());
  }
}

// ---------------------------------------------------------------- series

void series_suite(long n_max, std::vector<CheckResult>& out) {
  const int order = static_cast<int>(n_max);
  const TriSeries w = solve_functional_equation(order);
  {
    Tally t("fixed point matches closed formula");
    const TriSeries f = series_from_formula(order);
    for (const auto& [e, c] : f.terms()) {
      const BigCount got = w.coefficient(e);
      t.expect(got == c, [&] { return json{{"exponent", e}, {"series", big(got)}, {"formula", big(c)}}; });
    }
    for (const auto& [e, c] : w.terms()) {
      t.expect(f.coefficient(e) == c, [&] { return json{{"exponent", e}, {"series", big(c)}, {"formula", "0"}}; });
    }
    out.push_back(std::move(t).result());
  }
  {
    Tally t("functional equation residual");
    const TriSeries r = residual(w);
    t.expect(r.is_zero(), [&] { return json{{"order", order}, {"residual", r.csv()}}; });
    out.push_back(std::move(t).result());
  }
  {
    Tally t("series support");
    t.expect(respects_support(w), [&] { return json{{"order", order}}; });
    out.push_back(std::move(t).result());
  }
  {
    Tally t("fixed point matches enumeration");
    for (long n = 0; n <= std::min(n_max, 12L); ++n) {
      const auto hist = factor_histogram(static_cast<std::size_t>(n), 2);
      for (long k = 0; k <= n; ++k)
        for (long m = 0; m <= k; ++m) {
          const auto it = hist.find({static_cast<std::size_t>(k), static_cast<std::size_t>(m)});
          const BigCount want = it == hist.end() ? BigCount(0) : BigCount(static_cast<unsigned long>(it->second));
          const BigCount got = w.coefficient({static_cast<int>(n), static_cast<int>(k), static_cast<int>(m)});
          t.expect(got == want,
                   [&] { return json{{"n", n}, {"k", k}, {"m", m}, {"series", big(got)}, {"enumeration", big(want)}}; });
        }
    }
    out.push_back(std::move(t).result());
  }
}

// ----------------------------------------------------------------- polys

ExactPoly linear_factor(long root_num, long root_den) { return ExactPoly{-root_num, root_den}; }

void poly_suite(long n_max, std::uint64_t seed, std::vector<CheckResult>& out) {
  {
    Tally t("W polynomials are real-rooted");
    for (long n = 1; n <= n_max; ++n)
      for (long k = 1; k <= n; ++k) {
        const ExactPoly w = w_poly(n, k);
        t.expect(is_real_rooted(w), [&] { return json{{"n", n}, {"k", k}, {"W", w.str()}}; });
      }
    out.push_back(std::move(t).result());
  }
  {
    Tally t("reflected W share roots");
    for (long n = 2; n <= n_max; ++n)
      for (long k = 1; k <= n - 1; ++k)
        t.expect(same_root_set(w_poly(n, k), w_poly(n, n - k)), [&] { return json{{"n", n}, {"k", k}}; });
    out.push_back(std::move(t).result());
  }
  {
    Tally t("W via Hadamard product");
    for (long n = 2; n <= n_max; ++n)
      for (long k = 1; k < n; ++k) {
        const ExactPoly f = ExactPoly{0, 1} * ExactPoly{-1, 1}.pow(static_cast<unsigned>(n - k - 1));
        const ExactPoly g = ExactPoly{-1, 1}.pow(static_cast<unsigned>(k));
        const ExactPoly lhs = w_poly(n, k) * BigCount(k);
        const ExactPoly rhs = hadamard(f, g) * (binomial(n, k - 1) * (n % 2 ? -1 : 1));
        t.expect(lhs == rhs, [&] { return json{{"n", n}, {"k", k}, {"kW", lhs.str()}, {"hadamard", rhs.str()}}; });
      }
    out.push_back(std::move(t).result());
  }
  {
    Tally t("W in terms of Narayana polynomials");
    for (long k = 1; 2 * k <= n_max; ++k) {
      for (long j = 1; j <= 3; ++j) {
        const ExactPoly lhs = w_poly(2 * k + j, k) * BigCount(j);
        const ExactPoly rhs = gen_narayana_poly(k + j - 1, j - 1) * binomial(2 * k + j, k - 1);
        t.expect(lhs == rhs, [&] { return json{{"case", "2k+j"}, {"k", k}, {"j", j}, {"lhs", lhs.str()}, {"rhs", rhs.str()}}; });
      }
      std::vector<BigCount> c(static_cast<std::size_t>(k) + 1);
      for (long m = 1; m <= k; ++m) c[static_cast<std::size_t>(m)] = catalan(k) * binomial(k - 1, m - 1) * binomial(k, m);
      const ExactPoly mid(std::move(c));
      t.expect(w_poly(2 * k, k) == mid, [&] { return json{{"case", "2k"}, {"k", k}, {"W", w_poly(2 * k, k).str()}, {"formula", mid.str()}}; });
      for (long j = 1; j <= k; ++j) {
        const ExactPoly lhs = w_poly(2 * k - j, k) * BigCount(j);
        const ExactPoly rhs = gen_narayana_poly(k - 1, j - 1) * binomial(2 * k - j, k - 1);
        t.expect(lhs == rhs, [&] { return json{{"case", "2k-j"}, {"k", k}, {"j", j}, {"lhs", lhs.str()}, {"rhs", rhs.str()}}; });
      }
    }
    out.push_back(std::move(t).result());
  }
  {
    Tally t("gamma expansions");
    for (long k = 1; 2 * k <= n_max; ++k) {
      t.guarded(
          [&](Tally& tt) {
            const GammaExpansion g = gamma_expansion(w_poly(2 * k + 1, k), k + 1);
            std::vector<BigCount> want(g.gammas.size());
            for (long j = 1; 2 * j <= k + 1; ++j)
              want[static_cast<std::size_t>(j)] = binomial(2 * k + 1, k - 1) *
                                                  exact_div(factorial(k - 1), factorial(k - 2 * j + 1) * factorial(j - 1) * factorial(j), "gamma");
            tt.expect(g.gammas == want && g.positive() && g.reconstruct() == w_poly(2 * k + 1, k),
                      [&] { return json{{"case", "2k+1"}, {"k", k}}; });
          },
          [&] { return json{{"case", "2k+1"}, {"k", k}}; });
      if (k < 2) continue;
      t.guarded(
          [&](Tally& tt) {
            const GammaExpansion g = gamma_expansion(w_poly(2 * k - 1, k), k);
            std::vector<BigCount> want(g.gammas.size());
            for (long j = 1; 2 * j <= k; ++j)
              want[static_cast<std::size_t>(j)] = binomial(2 * k - 1, k - 1) *
                                                  exact_div(factorial(k - 2), factorial(k - 2 * j) * factorial(j - 1) * factorial(j), "gamma");
            tt.expect(g.gammas == want && g.positive() && g.reconstruct() == w_poly(2 * k - 1, k),
                      [&] { return json{{"case", "2k-1"}, {"k", k}}; });
          },
          [&] { return json{{"case", "2k-1"}, {"k", k}}; });
    }
    out.push_back(std::move(t).result());
  }
  {
    Tally t("symmetric decomposition");
    for (long n = 1; n <= n_max; ++n)
      for (long k = 1; k <= n; ++k)
        t.guarded(
            [&](Tally& tt) {
              const Decomposition d = symmetric_decomposition(n, k);
              const ExactPoly w = w_poly(n, k);
              const long deg = w.degree();
              const char want_case = n == deg + k ? (deg != k ? 'a' : 'b') : 'c';
              tt.expect(d.plus.nonnegative() && d.minus.nonnegative() && d.plus.symmetric_about(k) &&
                            d.minus.symmetric_about(k - 1) && d.recompose() == w && d.case_tag == want_case,
                        [&] { return json{{"n", n}, {"k", k}, {"plus", d.plus.str()}, {"minus", d.minus.str()}}; });
            },
            [&] { return json{{"n", n}, {"k", k}}; });
    struct Worked {
      long n, k;
      char tag;
      ExactPoly plus, minus;
    };
    const std::vector<Worked> worked{{4, 2, 'b', {0, 2}, {2, 2}}, {5, 2, 'c', {}, {5, 5}}, {5, 3, 'a', {0, 10, 10}, {}}};
    for (const auto& e : worked) {
      if (e.n > n_max) continue;
      const Decomposition d = symmetric_decomposition(e.n, e.k);
      t.expect(d.case_tag == e.tag && d.plus == e.plus && d.minus == e.minus, [&] {
        return json{{"n", e.n}, {"k", e.k}, {"case", std::string(1, d.case_tag)}, {"plus", d.plus.str()}, {"minus", d.minus.str()}};
      });
    }
    out.push_back(std::move(t).result());
  }
  {
    Tally t("Hadamard products stay real-rooted");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> deg(1, 5), num(1, 6), den(1, 3), coin(0, 1);
    for (int trial = 0; trial < 200; ++trial) {
      ExactPoly f{1}, g{1};
      std::vector<std::string> f_roots, g_roots;
      for (int i = deg(rng); i > 0; --i) {
        const long p = num(rng) * (coin(rng) ? 1 : -1), q = den(rng);
        f = f * linear_factor(p, q);
        f_roots.push_back(std::to_string(p) + "/" + std::to_string(q));
      }
      const long sign = coin(rng) ? 1 : -1;
      for (int i = deg(rng); i > 0; --i) {
        const long p = sign * num(rng), q = den(rng);
        g = g * linear_factor(p, q);
        g_roots.push_back(std::to_string(p) + "/" + std::to_string(q));
      }
      const ExactPoly h = hadamard(f, g);
      t.expect(!h.is_zero() && is_real_rooted(h), [&] {
        return json{{"seed", seed}, {"trial", trial}, {"f_roots", f_roots}, {"g_roots", g_roots}, {"product", h.str()}};
      });
    }
    out.push_back(std::move(t).result());
  }
}

}  // namespace

bool SuiteReport::all_pass() const {
  for (const auto& c : checks)
    if (!c.ok()) return false;
  return true;
}

nlohmann::json SuiteReport::to_json() const {
  json cs = json::array();
  for (const auto& c : checks) {
    cs.push_back({{"name", c.name},
                  {"passed", c.passed},
                  {"failed", c.failed},
                  {"counterexample", c.counterexample ? *c.counterexample : json(nullptr)}});
  }
  return {{"suite", suite}, {"n_max", n_max}, {"seed", seed}, {"all_pass", all_pass()},
          {"wall_time_s", wall_time_s}, {"checks", cs}};
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"oracle", "bijections", "identities", "series", "polys", "all"};
  return names;
}

SuiteReport run_suite(const std::string& name, long n_max, std::uint64_t seed) {
  if (n_max < 1) throw Error(Errc::invalid_argument, "n_max must be at least 1");
  const auto start = std::chrono::steady_clock::now();
  SuiteReport rep;
  rep.suite = name;
  rep.n_max = n_max;
  rep.seed = seed;
  const auto& names = suite_names();
  if (std::find(names.begin(), names.end(), name) == names.end())
    throw Error(Errc::invalid_argument, "unknown suite '" + name + "'");
  const bool all = name == "all";
  if (all || name == "oracle") oracle_suite(n_max, rep.checks);
  if (all || name == "bijections") bijection_suite(n_max, rep.checks);
  if (all || name == "identities") identity_suite(n_max, rep.checks);
  if (all || name == "series") series_suite(n_max, rep.checks);
  if (all || name == "polys") poly_suite(n_max, seed, rep.checks);
  rep.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

}  // namespace dyck
