#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "dyck/bigint.hpp"

namespace dyck {

// Dense polynomial in t with integer coefficients; index = power of t.
// Trailing zeros are trimmed, so the zero polynomial has no coefficients.
class ExactPoly {
 public:
  ExactPoly() = default;
  explicit ExactPoly(std::vector<BigCount> coeffs);
  ExactPoly(std::initializer_list<long> coeffs);

  static ExactPoly monomial(long degree, const BigCount& c = 1);

  const std::vector<BigCount>& coeffs() const noexcept { return c_; }
  long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  BigCount coeff(long i) const { return i >= 0 && i <= degree() ? c_[static_cast<std::size_t>(i)] : BigCount(0); }
  const BigCount& leading() const;

  ExactPoly& operator+=(const ExactPoly& o);
  ExactPoly& operator-=(const ExactPoly& o);
  friend ExactPoly operator+(ExactPoly a, const ExactPoly& b) { return a += b; }
  friend ExactPoly operator-(ExactPoly a, const ExactPoly& b) { return a -= b; }
  friend ExactPoly operator-(ExactPoly a);
  friend ExactPoly operator*(const ExactPoly& a, const ExactPoly& b);
  friend ExactPoly operator*(ExactPoly a, const BigCount& s);
  friend ExactPoly operator*(const BigCount& s, ExactPoly a) { return std::move(a) * s; }

  ExactPoly pow(unsigned e) const;
  ExactPoly derivative() const;
  // Multiplies by t^shift.
  ExactPoly shifted(long shift) const;

  // Exact value at p/q as a rational.
  BigRational eval(const BigRational& x) const;
  // Sign of the value at x (-1, 0 or 1).
  int sign_at(const BigRational& x) const;

  // Unsigned content; zero for the zero polynomial.
  BigCount content() const;
  // Divided by its content, with a positive leading coefficient.
  ExactPoly primitive() const;

  // c_i == c_{d-i} for 0 <= i <= d, coefficients above d must vanish.
  bool symmetric_about(long d) const;
  bool nonnegative() const;

  // "3t^2 + 2t - 1" style.
  std::string str() const;
  // "[c0, c1, ...]".
  std::string coeff_list() const;

  friend bool operator==(const ExactPoly&, const ExactPoly&) = default;

 private:
  void trim();
  std::vector<BigCount> c_;
};

// lc(b)^(deg a - deg b + 1) a mod b, with remainder computed over the integers.
ExactPoly pseudo_remainder(const ExactPoly& a, const ExactPoly& b);

// Exact quotient a / b; throws InexactDivision if b does not divide a over Z.
ExactPoly divide_exact(const ExactPoly& a, const ExactPoly& b);

// Primitive gcd with positive leading coefficient.
ExactPoly poly_gcd(const ExactPoly& a, const ExactPoly& b);

// Primitive part of f / gcd(f, f'). Throws ZeroPolynomial.
ExactPoly squarefree_part(const ExactPoly& f);

// Factors a_1, a_2, ... with primitive(f) = a_1 a_2^2 a_3^3 ..., each squarefree.
std::vector<ExactPoly> squarefree_factors(const ExactPoly& f);

// Coefficientwise product up to the smaller degree.
ExactPoly hadamard(const ExactPoly& f, const ExactPoly& g);

}  // namespace dyck
