#include <doctest.h>

#include <fstream>
#include <sstream>

#include "../support/oracles.hpp"
#include "dyck/compositions.hpp"
#include "dyck/counting.hpp"
#include "dyck/error.hpp"
#include "dyck/series.hpp"
#include "dyck/words.hpp"

#ifndef GOLDEN_DIR
#error "GOLDEN_DIR must point at tests/golden"
#endif

using namespace dyck;

namespace {

// Rows "n,k,m,w" of the reference table.
std::vector<std::array<long, 4>> golden_rows() {
  std::ifstream in(std::string(GOLDEN_DIR) + "/table1.csv");
  REQUIRE(in.good());
  std::string line;
  std::getline(in, line);
  std::vector<std::array<long, 4>> rows;
  while (std::getline(in, line)) {
    std::array<long, 4> r{};
    char c;
    std::istringstream ss(line);
    ss >> r[0] >> c >> r[1] >> c >> r[2] >> c >> r[3];
    rows.push_back(r);
  }
  return rows;
}

std::uint64_t oracle_count(const std::map<std::vector<int>, std::uint64_t>& h, std::vector<int> key) {
  const auto it = h.find(key);
  return it == h.end() ? 0 : it->second;
}

}  // namespace

TEST_SUITE("counting") {
  TEST_CASE("binomials and Narayana numbers") {
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(-1, -1) == 1);
    CHECK(binomial(3, -1) == 0);
    CHECK(binomial(3, 4) == 0);
    CHECK(catalan(3) == 5);
    CHECK(catalan(20) == BigCount("6564120420"));
    CHECK(narayana(3, 2) == 3);
    CHECK(narayana(0, 0) == 1);
    CHECK(narayana(4, 0) == 0);
    CHECK(narayana(4, 5) == 0);
    for (long n = 1; n <= 20; ++n) {
      BigCount sum = 0;
      for (long k = 0; k <= n; ++k) {
        CHECK(narayana(n, k) == narayana(n, n + 1 - k));
        sum += narayana(n, k);
      }
      CHECK(sum == catalan(n));
    }
    for (int n = 0; n <= 10; ++n)
      for (const auto& [key, count] : oracle::histogram(n, 1)) CHECK(narayana(n, key[0]) == count);
  }

  TEST_CASE("generalized Narayana numbers") {
    CHECK(gen_narayana(2, 1, 1) == 2);
    for (long n = 0; n <= 10; ++n)
      for (long k = 0; k <= n + 1; ++k) CHECK(gen_narayana(n, k, 0) == narayana(n, k));
    for (int n = 0; n <= 8; ++n)
      for (int r = 0; r <= n; ++r) {
        const auto ref = oracle::elevated_peaks(n, r);
        for (int k = 0; k <= n + 1; ++k) {
          const auto it = ref.find(k);
          CHECK(gen_narayana(n, k, r) == (it == ref.end() ? 0 : it->second));
        }
      }
  }

  TEST_CASE("closed formula against enumeration") {
    CHECK(w_formula(7, 4, 2) == 105);
    CHECK(w_formula(10, 5, 5) == 42);
    CHECK(w_formula(0, 0, 0) == 1);
    for (long k = 1; k <= 12; ++k) CHECK(w_formula(k, k, 0) == 1);
    CHECK(w_formula(5, 6, 0) == 0);
    CHECK(w_formula(5, 2, 3) == 0);
    for (int n = 0; n <= 10; ++n) {
      const auto h = oracle::histogram(n, 2);
      for (int k = 0; k <= n + 1; ++k)
        for (int m = 0; m <= n + 1; ++m) CHECK(w_formula(n, k, m) == oracle_count(h, {k, m}));
    }
  }

  TEST_CASE("reference table rows") {
    const auto rows = golden_rows();
    CHECK(rows.size() == 106);
    for (const auto& r : rows) CHECK(w_formula(r[0], r[1], r[2]) == r[3]);
  }

  TEST_CASE("several factor lengths") {
    for (long n = 0; n <= 12; ++n)
      for (long k = 0; k <= n + 1; ++k) {
        const std::vector<long> one{k};
        CHECK(w_formula_multi(n, one) == narayana(n, k));
        for (long m = 0; m <= n; ++m) {
          const std::vector<long> two{k, m};
          CHECK(w_formula_multi(n, two) == w_formula(n, k, m));
        }
      }
    const std::vector<long> ks{3, 3, 1};
    const std::vector<std::size_t> uks{3, 3, 1};
    CHECK(w_formula_multi(7, ks) == w_oracle_multi(7, uks));
    for (int n = 0; n <= 9; ++n) {
      const auto h = oracle::histogram(n, 4);
      for (const auto& [key, count] : h) {
        const std::vector<long> lk(key.begin(), key.end());
        CHECK(w_formula_multi(n, lk) == count);
      }
    }
    const std::vector<long> parts{2, 1, 1};
    CHECK(multinomial(4, parts) == 12);
  }

  TEST_CASE("relations with Narayana numbers") {
    for (const auto& id : w_identities(3, 2, 0)) CHECK(id.holds());
    CHECK(w_formula(7, 3, 2) == 63);
    CHECK(binomial(7, 2) * narayana(3, 2) == 63);
    CHECK(w_formula(3, 2, 1) == 3);
    CHECK(w_formula(4, 1, 1) == 1);
    CHECK(gen_narayana(2, 1, 1) * binomial(4, 0) == 2);
    for (long k = 1; k <= 8; ++k)
      for (long m = 0; m <= k; ++m)
        for (long j = 0; j <= 4; ++j)
          for (const auto& id : w_identities(k, m, j)) {
            INFO(id.name << " k=" << k << " m=" << m << " j=" << j);
            CHECK(id.holds());
          }
  }

  TEST_CASE("number theory helpers") {
    CHECK(totient(1) == 1);
    CHECK(totient(12) == 4);
    CHECK(mobius(1) == 1);
    CHECK(mobius(6) == 1);
    CHECK(mobius(12) == 0);
    CHECK(mobius(7) == -1);
    CHECK(divisors(12) == std::vector<long>{1, 2, 3, 4, 6, 12});
    CHECK(exact_div(12, 4, "t") == 3);
    try {
      exact_div(7, 2, "t");
      FAIL("expected InexactDivision");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::inexact_division);
    }
  }

  TEST_CASE("cyclic composition counts") {
    CHECK(ccomp_count(2, 1, 1, Sign::plus) == 1);
    CHECK(ccomp_count(2, 2, 0, Sign::zero) == 1);
    for (long k = 1; k <= 12; ++k)
      for (long j = 0; 2 * k + j <= 12; ++j)
        for (long m = 0; m <= k; ++m) {
          const Sign s = j == 0 ? Sign::zero : Sign::plus;
          CHECK(ccomp_count(k, m, j, s) == oracle::cyclic_classes(static_cast<int>(2 * k + j), static_cast<int>(k), static_cast<int>(m)).size());
          if (j >= 1 && j <= k && 2 * k - j <= 12)
            CHECK(ccomp_count(k, m, j, Sign::minus) == oracle::cyclic_classes(static_cast<int>(2 * k - j), static_cast<int>(k), static_cast<int>(m)).size());
        }
  }

  TEST_CASE("Catalan numbers from primitive classes") {
    CHECK(catalan_via_primitive(1) == 1);
    CHECK(catalan_via_primitive(4) == 14);
    for (long n = 1; n <= 12; ++n) CHECK(catalan_via_primitive(n) == catalan(n));
  }

  TEST_CASE("reflection symmetries") {
    for (long k = 1; k <= 25; ++k)
      for (long m = 0; m <= k + 1; ++m) {
        const long n1 = 2 * k + 1, n2 = 2 * k - 1;
        CHECK(w_formula(n1, k, m) == w_formula(n1, k, k + 1 - m));
        if (k >= 2) CHECK(w_formula(n2, k, m) == w_formula(n2, k, k - m));
      }
    for (long n = 2; n <= 25; ++n)
      for (long k = 1; k < n; ++k)
        for (long m = 0; m <= k; ++m)
          CHECK(w_formula(n, k, m) * ((n - k) * (n - k + 1)) == w_formula(n, n - k, m) * (k * (k + 1)));
  }
}

TEST_SUITE("genfun") {
  TEST_CASE("series arithmetic") {
    const TriSeries w = solve_functional_equation(6);
    CHECK(TriSeries::constant(6, 1) * w == w);
    CHECK((TriSeries::monomial(6, {1, 1, 0}) * TriSeries::constant(6, 1)).terms().size() == 1);
    const TriSeries four = solve_functional_equation(4);
    const TriSeries shifted = four.scale_monomial({2, 1, 1});
    for (const auto& [e, c] : shifted.terms()) {
      CHECK(e[0] <= 4);
      CHECK(four.coefficient({e[0] - 2, e[1] - 1, e[2] - 1}) == c);
    }
    CHECK(shifted.coefficient({2, 1, 1}) == 1);
    CHECK(shifted.coefficient({5, 2, 1}) == 0);
    CHECK((w - w).is_zero());
    try {
      (void)(TriSeries(3) + TriSeries(4));
      FAIL("expected OrderMismatch");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::order_mismatch);
    }
  }

  TEST_CASE("functional equation solution") {
    const TriSeries zero = solve_functional_equation(0);
    CHECK(zero.terms().size() == 1);
    CHECK(zero.coefficient({0, 0, 0}) == 1);
    CHECK(solve_functional_equation(5).coefficient({5, 3, 2}) == 10);
    const TriSeries ten = solve_functional_equation(10);
    const auto rows = golden_rows();
    CHECK(ten.terms().size() == rows.size());
    for (const auto& r : rows) CHECK(ten.coefficient({static_cast<int>(r[0]), static_cast<int>(r[1]), static_cast<int>(r[2])}) == r[3]);
    CHECK(residual(ten).is_zero());
    CHECK(respects_support(ten));
  }

  TEST_CASE("residual") {
    const TriSeries r = residual(TriSeries::constant(1, 1));
    REQUIRE(r.terms().size() == 1);
    CHECK(r.coefficient({1, 1, 0}) == 1);
    for (int n = 0; n <= 12; ++n) CHECK(residual(series_from_formula(n)).is_zero());
  }

  TEST_CASE("three-way agreement") {
    for (int order = 0; order <= 10; ++order) {
      const TriSeries solved = solve_functional_equation(order);
      CHECK(solved == series_from_formula(order));
      for (int n = 0; n <= order; ++n) {
        const auto h = oracle::histogram(n, 2);
        std::size_t nonzero = 0;
        for (const auto& [e, c] : solved.terms()) nonzero += e[0] == n;
        CHECK(nonzero == h.size());
        for (const auto& [key, count] : h) CHECK(solved.coefficient({n, key[0], key[1]}) == count);
      }
    }
  }

  TEST_CASE("support and csv") {
    TriSeries bad(3);
    bad.add_term({3, 1, 2}, 1);
    CHECK_FALSE(respects_support(bad));
    const std::string csv = solve_functional_equation(2).csv();
    CHECK(csv == "n,k,m,coefficient\n0,0,0,1\n1,1,0,1\n2,1,1,1\n2,2,0,1\n");
  }
}
