#include <doctest.h>

#include <algorithm>
#include <random>

#include "dyck/counting.hpp"
#include "dyck/error.hpp"
#include "dyck/families.hpp"
#include "dyck/poly.hpp"
#include "dyck/roots.hpp"

using namespace dyck;

namespace {

ExactPoly from_roots(const std::vector<long>& roots, long lead = 1) {
  ExactPoly f{lead};
  for (long r : roots) f = f * ExactPoly{-r, 1};
  return f;
}

Errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return Errc::invalid_argument;
}

// Weak interlacing of sorted root lists, straight from the root chains.
bool chains_interlace(std::vector<long> g, std::vector<long> f) {
  std::sort(g.begin(), g.end());
  std::sort(f.begin(), f.end());
  if (g.empty()) return true;
  if (f.size() == g.size() + 1) {
    for (std::size_t i = 0; i < g.size(); ++i)
      if (!(f[i] <= g[i] && g[i] <= f[i + 1])) return false;
    return true;
  }
  if (f.size() == g.size()) {
    for (std::size_t i = 0; i < g.size(); ++i) {
      if (g[i] > f[i]) return false;
      if (i + 1 < g.size() && f[i] > g[i + 1]) return false;
    }
    return true;
  }
  return false;
}

}  // namespace

TEST_SUITE("polynomials") {
  TEST_CASE("arithmetic") {
    const ExactPoly f{1, 2, 1};
    CHECK(f == ExactPoly{1, 1}.pow(2));
    CHECK(f.degree() == 2);
    CHECK(ExactPoly{}.is_zero());
    CHECK(ExactPoly{0, 0, 0}.is_zero());
    CHECK(f.derivative() == ExactPoly{2, 2});
    CHECK(f.shifted(2) == ExactPoly{0, 0, 1, 2, 1});
    CHECK(f.eval(BigRational(1, 2)) == BigRational(9, 4));
    CHECK(f.sign_at(BigRational(-1)) == 0);
    CHECK(ExactPoly{-1, 0, 1}.sign_at(BigRational(0)) == -1);
    CHECK(ExactPoly{4, 6}.content() == 2);
    CHECK(ExactPoly{-4, -6}.primitive() == ExactPoly{2, 3});
    CHECK(f.str() == "t^2 + 2t + 1");
    CHECK(ExactPoly{-1, 0, 3}.str() == "3t^2 - 1");
    CHECK(f.coeff_list() == "[1, 2, 1]");
    CHECK(f.symmetric_about(2));
    CHECK_FALSE(f.symmetric_about(3));
    CHECK(ExactPoly{0, 5, 5}.symmetric_about(3));
    CHECK(divide_exact(from_roots({1, 2, 3}), from_roots({2})) == from_roots({1, 3}));
    CHECK(code_of([] { divide_exact(ExactPoly{1, 0, 1}, ExactPoly{1, 1}); }) == Errc::inexact_division);
    CHECK(poly_gcd(from_roots({1, 2, 2}), from_roots({2, 3})) == from_roots({2}));
    CHECK(pseudo_remainder(ExactPoly{0, 0, 1}, ExactPoly{-1, 1}) == ExactPoly{1});
  }

  TEST_CASE("squarefree parts") {
    const ExactPoly f = from_roots({-1, -1, -1, 2});
    CHECK(squarefree_part(f) == from_roots({-1, 2}));
    const auto parts = squarefree_factors(f);
    REQUIRE(parts.size() == 3);
    CHECK(parts[0] == from_roots({2}));
    CHECK(parts[1] == ExactPoly{1});
    CHECK(parts[2] == from_roots({-1}));
    CHECK(code_of([] { squarefree_part(ExactPoly{}); }) == Errc::zero_polynomial);
  }

  TEST_CASE("Hadamard products") {
    const ExactPoly f{3, 4, 5};
    CHECK(hadamard(f, ExactPoly{1}) == ExactPoly{3});
    // t(t-1)^2 * (t-1)^3 coefficientwise, then the closed-form prefactor.
    const ExactPoly a = ExactPoly{0, 1} * ExactPoly{-1, 1}.pow(2);
    const ExactPoly b = ExactPoly{-1, 1}.pow(3);
    const ExactPoly h = hadamard(a, b);
    CHECK(h == ExactPoly{0, 3, 6, 1});
    CHECK(w_poly(6, 3) * BigCount(3) == h * binomial(6, 2));
  }

  TEST_CASE("Sturm root counts") {
    CHECK(sturm_distinct_real_roots(ExactPoly{-1, 0, 1}) == 2);
    CHECK(sturm_distinct_real_roots(ExactPoly{1, 0, 1}) == 0);
    CHECK(sturm_distinct_real_roots(ExactPoly{0, 15, 30, 5}) == 3);
    CHECK(sturm_distinct_real_roots(ExactPoly{7}) == 0);
    CHECK(code_of([] { sturm_distinct_real_roots(ExactPoly{}); }) == Errc::zero_polynomial);
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long> root(-9, 9);
    std::uniform_int_distribution<int> deg(1, 7);
    for (int trial = 0; trial < 200; ++trial) {
      std::vector<long> roots;
      for (int i = deg(rng); i > 0; --i) roots.push_back(root(rng));
      std::vector<long> distinct = roots;
      std::sort(distinct.begin(), distinct.end());
      distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
      const ExactPoly f = from_roots(roots, trial % 2 ? 3 : -2);
      CHECK(sturm_distinct_real_roots(f) == static_cast<int>(distinct.size()));
      CHECK(is_real_rooted(f));
      const ExactPoly g = f * ExactPoly{1, 0, 1};
      CHECK(sturm_distinct_real_roots(g) == static_cast<int>(distinct.size()));
      CHECK_FALSE(is_real_rooted(g));
      const auto iv = isolate_real_roots(f);
      REQUIRE(iv.size() == distinct.size());
      for (std::size_t i = 0; i < iv.size(); ++i) {
        CHECK(iv[i].lo < distinct[i]);
        CHECK(distinct[i] <= iv[i].hi);
        if (i) CHECK(iv[i - 1].hi <= iv[i].lo);
      }
    }
  }

  TEST_CASE("real-rootedness") {
    CHECK(is_real_rooted(ExactPoly{1, 1}.pow(3)));
    CHECK_FALSE(is_real_rooted(ExactPoly{1, 1, 1}));
    CHECK(is_real_rooted(ExactPoly{5}));
    CHECK(code_of([] { is_real_rooted(ExactPoly{}); }) == Errc::zero_polynomial);
    for (long n = 1; n <= 20; ++n)
      for (long k = 1; k <= n; ++k) CHECK(is_real_rooted(w_poly(n, k)));
  }

  TEST_CASE("interlacing") {
    CHECK(interlaces(ExactPoly{4}, from_roots({1, 2, 3})));
    CHECK(interlaces(from_roots({-1}), from_roots({-2, 0})));
    CHECK_FALSE(interlaces(from_roots({-3}), from_roots({-2, 0})));
    CHECK_FALSE(interlaces(from_roots({0}), from_roots({1, 2, 3})));
    CHECK(interlaces(from_roots({-1}), from_roots({-1, -1})));
    CHECK(code_of([] { interlaces(ExactPoly{1, 0, 1}, from_roots({1, 2, 3})); }) == Errc::not_real_rooted);
    CHECK(code_of([] { interlaces(from_roots({1}), ExactPoly{1, 0, 1}); }) == Errc::not_real_rooted);
    CHECK(code_of([] { interlaces(ExactPoly{}, from_roots({1})); }) == Errc::zero_polynomial);

    std::mt19937_64 rng(5);
    std::uniform_int_distribution<long> root(-6, 6);
    std::uniform_int_distribution<int> deg(1, 5), extra(0, 1);
    for (int trial = 0; trial < 500; ++trial) {
      std::vector<long> f, g;
      const int d = deg(rng);
      for (int i = 0; i < d; ++i) f.push_back(root(rng));
      for (int i = 0; i < d - 1 + extra(rng); ++i) g.push_back(root(rng));
      INFO("trial " << trial);
      CHECK(interlaces(from_roots(g), from_roots(f, 2)) == chains_interlace(g, f));
    }
  }

  TEST_CASE("root sets") {
    const ExactPoly f = from_roots({1, 1, -2});
    CHECK(same_root_set(f, f * BigCount(3)));
    CHECK(same_root_set(f, from_roots({1, -2})));
    CHECK(same_root_set(w_poly(7, 2), w_poly(7, 5)));
    CHECK_FALSE(same_root_set(ExactPoly{0, 1}, ExactPoly{1, 1}));
    CHECK(code_of([] { same_root_set(ExactPoly{}, ExactPoly{1}); }) == Errc::zero_polynomial);
    for (long n = 2; n <= 20; ++n)
      for (long k = 1; k < n; ++k) CHECK(same_root_set(w_poly(n, k), w_poly(n, n - k)));
  }

  TEST_CASE("named families") {
    CHECK(w_poly(5, 2) == ExactPoly{0, 5, 5});
    for (long k = 1; k <= 10; ++k) CHECK(w_poly(k, k) == ExactPoly{1});
    CHECK(w_poly(6, 3) == ExactPoly{0, 15, 30, 5});
    CHECK(narayana_poly(3) == ExactPoly{0, 1, 3, 1});
    for (long k = 1; k <= 8; ++k) CHECK(gen_narayana_poly(k, 0) == narayana_poly(k));
    for (long k = 1; k <= 6; ++k)
      for (long j = 0; j <= k; ++j) {
        const ExactPoly b = bar_narayana_poly(k, j);
        for (long i = 0; i <= k - j; ++i)
          CHECK(b.coeff(i) * (k + 1) == BigCount(j + 1) * binomial(k + 1, i) * binomial(k + 1, i + j + 1));
      }
    // The Narayana polynomials interlace consecutively.
    CHECK(interlaces(narayana_poly(3), narayana_poly(4)));
    for (long k = 1; k <= 10; ++k) {
      std::vector<BigCount> c(static_cast<std::size_t>(k) + 1);
      for (long m = 1; m <= k; ++m) c[static_cast<std::size_t>(m)] = catalan(k) * binomial(k - 1, m - 1) * binomial(k, m);
      CHECK(w_poly(2 * k, k) == ExactPoly(c));
      CHECK(w_poly(2 * k + 1, k) == narayana_poly(k) * binomial(2 * k + 1, k - 1));
      if (k >= 2) CHECK(w_poly(2 * k - 1, k) == narayana_poly(k - 1) * binomial(2 * k - 1, k - 1));
    }
  }

  TEST_CASE("gamma expansions") {
    const GammaExpansion g = gamma_expansion(w_poly(5, 2), 3);
    CHECK(g.gammas == std::vector<BigCount>{0, 5});
    CHECK(g.reconstruct() == w_poly(5, 2));
    CHECK(code_of([] { gamma_expansion(w_poly(6, 2), 3); }) == Errc::not_symmetric);
    CHECK(code_of([] { gamma_expansion(w_poly(6, 2), 2); }) == Errc::not_symmetric);
    for (long k = 1; k <= 10; ++k) {
      const GammaExpansion n = gamma_expansion(narayana_poly(k), k + 1);
      for (long j = 0; j < static_cast<long>(n.gammas.size()); ++j) {
        const BigCount want = j == 0 || k - 2 * j + 1 < 0
                                  ? BigCount(0)
                                  : exact_div(factorial(k - 1), factorial(k - 2 * j + 1) * factorial(j - 1) * factorial(j), "g");
        CHECK(n.gammas[static_cast<std::size_t>(j)] == want);
      }
      CHECK(n.positive());
      CHECK(n.reconstruct() == narayana_poly(k));
    }
    for (long n = 1; n <= 20; ++n)
      for (long k = 1; k <= n; ++k) {
        const ExactPoly w = w_poly(n, k);
        const long center = w.degree() + [&] {
          long low = 0;
          while (w.coeff(low) == 0) ++low;
          return low;
        }();
        if (!w.symmetric_about(center)) continue;
        CHECK(gamma_expansion(w, center).reconstruct() == w);
      }
  }

  TEST_CASE("symmetric decomposition") {
    const Decomposition b = symmetric_decomposition(4, 2);
    CHECK(b.case_tag == 'b');
    CHECK(b.plus == ExactPoly{0, 2});
    CHECK(b.minus == ExactPoly{2, 2});
    CHECK(b.recompose() == ExactPoly{0, 4, 2});
    const Decomposition c = symmetric_decomposition(5, 2);
    CHECK(c.case_tag == 'c');
    CHECK(c.plus.is_zero());
    CHECK(c.minus == ExactPoly{5, 5});
    const Decomposition a = symmetric_decomposition(5, 3);
    CHECK(a.case_tag == 'a');
    CHECK(a.plus == ExactPoly{0, 10, 10});
    CHECK(a.minus.is_zero());
    CHECK(code_of([] { symmetric_decomposition(3, 4); }) == Errc::invalid_argument);
    CHECK(code_of([] { symmetric_decomposition(3, 0); }) == Errc::invalid_argument);
    for (long n = 1; n <= 20; ++n)
      for (long k = 1; k <= n; ++k) {
        const Decomposition d = symmetric_decomposition(n, k);
        const ExactPoly w = w_poly(n, k);
        CHECK(d.plus.nonnegative());
        CHECK(d.minus.nonnegative());
        CHECK(d.plus.symmetric_about(k));
        CHECK(d.minus.symmetric_about(k - 1));
        CHECK(d.recompose() == w);
        const char want = n == w.degree() + k ? (w.degree() != k ? 'a' : 'b') : 'c';
        CHECK(d.case_tag == want);
      }
  }
}
