#pragma once

#include <array>
#include <map>
#include <string>

#include "dyck/bigint.hpp"

namespace dyck {

using Exponent = std::array<int, 3>;  // powers of x, y, z

// Power series in x, y, z truncated above x^order. Zero coefficients are never stored.
class TriSeries {
 public:
  explicit TriSeries(int order = 0);

  static TriSeries constant(int order, const BigCount& c);
  static TriSeries monomial(int order, Exponent e, const BigCount& c = 1);

  int order() const noexcept { return order_; }
  const std::map<Exponent, BigCount>& terms() const noexcept { return terms_; }
  BigCount coefficient(Exponent e) const;
  void add_term(Exponent e, const BigCount& c);
  bool is_zero() const noexcept { return terms_.empty(); }

  TriSeries& operator+=(const TriSeries& o);
  TriSeries& operator-=(const TriSeries& o);
  friend TriSeries operator+(TriSeries a, const TriSeries& b) { return a += b; }
  friend TriSeries operator-(TriSeries a, const TriSeries& b) { return a -= b; }
  friend TriSeries operator*(const TriSeries& a, const TriSeries& b);

  // Multiplies by c * x^e0 y^e1 z^e2.
  TriSeries scale_monomial(Exponent e, const BigCount& c = 1) const;

  // "n,k,m,coefficient" lines sorted by exponent, with a header.
  std::string csv() const;

  friend bool operator==(const TriSeries&, const TriSeries&) = default;

 private:
  void require_same_order(const TriSeries& o) const;

  int order_;
  std::map<Exponent, BigCount> terms_;
};

// W = 1 + V W, V = xy + x^2 y z W + x (W - 1 - x y W), iterated to a fixed point.
TriSeries solve_functional_equation(int order);

// (x - x^2 y + x^2 y z) W^2 - (1 + x - x y) W + 1.
TriSeries residual(const TriSeries& w);

// Coefficients taken from the closed formula.
TriSeries series_from_formula(int order);

// Every stored term satisfies m <= k and k + m <= n, or is (k, k, 0).
bool respects_support(const TriSeries& w);

}  // namespace dyck
