#include "dyck/poly.hpp"

#include <algorithm>

#include "dyck/error.hpp"

namespace dyck {

ExactPoly::ExactPoly(std::vector<BigCount> coeffs) : c_(std::move(coeffs)) { trim(); }

ExactPoly::ExactPoly(std::initializer_list<long> coeffs) {
  for (long c : coeffs) c_.emplace_back(c);
  trim();
}

ExactPoly ExactPoly::monomial(long degree, const BigCount& c) {
  if (degree < 0) throw Error(Errc::invalid_argument, "negative monomial degree");
  std::vector<BigCount> v(static_cast<std::size_t>(degree) + 1, 0);
  v.back() = c;
  return ExactPoly(std::move(v));
}

void ExactPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const BigCount& ExactPoly::leading() const {
  if (c_.empty()) throw Error(Errc::zero_polynomial, "zero polynomial has no leading coefficient");
  return c_.back();
}

ExactPoly& ExactPoly::operator+=(const ExactPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

ExactPoly& ExactPoly::operator-=(const ExactPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

ExactPoly operator-(ExactPoly a) {
  for (auto& c : a.c_) c = -c;
  return a;
}

ExactPoly operator*(const ExactPoly& a, const ExactPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigCount> out(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  }
  return ExactPoly(std::move(out));
}

ExactPoly operator*(ExactPoly a, const BigCount& s) {
  for (auto& c : a.c_) c *= s;
  a.trim();
  return a;
}

ExactPoly ExactPoly::pow(unsigned e) const {
  ExactPoly out{1}, base = *this;
  while (e) {
    if (e & 1u) out = out * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return out;
}

ExactPoly ExactPoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<BigCount> out(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) out[i - 1] = c_[i] * static_cast<unsigned long>(i);
  return ExactPoly(std::move(out));
}

ExactPoly ExactPoly::shifted(long shift) const {
  if (is_zero()) return {};
  std::vector<BigCount> out(static_cast<std::size_t>(shift), 0);
  out.insert(out.end(), c_.begin(), c_.end());
  return ExactPoly(std::move(out));
}

BigRational ExactPoly::eval(const BigRational& x) const {
  BigRational acc = 0;
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + BigRational(c_[i]);
  return acc;
}

int ExactPoly::sign_at(const BigRational& x) const {
  // q^d f(p/q) has the sign of f(p/q) and stays in the integers.
  const BigCount& p = x.get_num();
  const BigCount& q = x.get_den();
  BigCount acc = 0, qpow = 1;
  for (std::size_t i = c_.size(); i-- > 0;) {
    acc = acc * p + c_[i] * qpow;
    qpow *= q;
  }
  return sgn(acc);
}

BigCount ExactPoly::content() const {
  BigCount g = 0;
  for (const auto& c : c_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

ExactPoly ExactPoly::primitive() const {
  if (is_zero()) return {};
  BigCount g = content();
  if (c_.back() < 0) g = -g;
  ExactPoly out = *this;
  for (auto& c : out.c_) c = exact_div(c, g, "primitive part");
  return out;
}

bool ExactPoly::symmetric_about(long d) const {
  if (degree() > d) return false;
  for (long i = 0; i <= d; ++i)
    if (coeff(i) != coeff(d - i)) return false;
  return true;
}

bool ExactPoly::nonnegative() const {
  return std::all_of(c_.begin(), c_.end(), [](const BigCount& c) { return c >= 0; });
}

std::string ExactPoly::str() const {
  if (is_zero()) return "0";
  std::string s;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (c_[i] == 0) continue;
    BigCount mag = abs(c_[i]);
    if (s.empty())
      s += c_[i] < 0 ? "-" : "";
    else
      s += c_[i] < 0 ? " - " : " + ";
    if (mag != 1 || i == 0) s += mag.get_str();
    if (i >= 1) s += "t";
    if (i >= 2) s += "^" + std::to_string(i);
  }
  return s;
}

std::string ExactPoly::coeff_list() const {
  std::string s = "[";
  for (std::size_t i = 0; i < c_.size(); ++i) s += (i ? ", " : "") + c_[i].get_str();
  return s + "]";
}

ExactPoly pseudo_remainder(const ExactPoly& a, const ExactPoly& b) {
  if (b.is_zero()) throw Error(Errc::zero_polynomial, "pseudo-remainder by zero");
  if (a.degree() < b.degree()) return a;
  std::vector<BigCount> r = a.coeffs();
  const auto& bc = b.coeffs();
  const BigCount lb = b.leading();
  const long db = b.degree();
  long dr = a.degree();
  unsigned steps = 0;
  while (dr >= db && dr >= 0) {
    const BigCount lr = r[static_cast<std::size_t>(dr)];
    for (auto& c : r) c *= lb;
    for (long i = 0; i <= db; ++i) r[static_cast<std::size_t>(dr - db + i)] -= lr * bc[static_cast<std::size_t>(i)];
    ++steps;
    while (dr >= 0 && r[static_cast<std::size_t>(dr)] == 0) --dr;
  }
  // Pad so the multiplier is always lc(b)^(deg a - deg b + 1).
  const unsigned want = static_cast<unsigned>(a.degree() - db + 1);
  ExactPoly out(std::move(r));
  if (steps < want) {
    BigCount scale;
    mpz_pow_ui(scale.get_mpz_t(), lb.get_mpz_t(), want - steps);
    out = out * scale;
  }
  return out;
}

ExactPoly divide_exact(const ExactPoly& a, const ExactPoly& b) {
  if (b.is_zero()) throw Error(Errc::zero_polynomial, "division by the zero polynomial");
  if (a.is_zero()) return {};
  if (a.degree() < b.degree()) throw Error(Errc::inexact_division, "divisor has higher degree");
  std::vector<BigCount> r = a.coeffs();
  const auto& bc = b.coeffs();
  const long db = b.degree();
  std::vector<BigCount> q(static_cast<std::size_t>(a.degree() - db) + 1, 0);
  for (long i = a.degree() - db; i >= 0; --i) {
    const BigCount qi = exact_div(r[static_cast<std::size_t>(i + db)], b.leading(), "polynomial division");
    q[static_cast<std::size_t>(i)] = qi;
    for (long j = 0; j <= db; ++j) r[static_cast<std::size_t>(i + j)] -= qi * bc[static_cast<std::size_t>(j)];
  }
  for (const auto& c : r)
    if (c != 0) throw Error(Errc::inexact_division, "nonzero polynomial remainder");
  return ExactPoly(std::move(q));
}

ExactPoly poly_gcd(const ExactPoly& a, const ExactPoly& b) {
  ExactPoly x = a.primitive(), y = b.primitive();
  if (x.is_zero()) return y;
  if (y.is_zero()) return x;
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    ExactPoly r = pseudo_remainder(x, y).primitive();
    x = std::move(y);
    y = std::move(r);
  }
  return x.primitive();
}

ExactPoly squarefree_part(const ExactPoly& f) {
  if (f.is_zero()) throw Error(Errc::zero_polynomial, "squarefree part of zero");
  const ExactPoly p = f.primitive();
  if (p.degree() == 0) return p;
  return divide_exact(p, poly_gcd(p, p.derivative())).primitive();
}

std::vector<ExactPoly> squarefree_factors(const ExactPoly& f) {
  if (f.is_zero()) throw Error(Errc::zero_polynomial, "squarefree factors of zero");
  std::vector<ExactPoly> out;
  const ExactPoly p = f.primitive();
  if (p.degree() == 0) return out;
  // Yun's algorithm.
  ExactPoly a = poly_gcd(p, p.derivative());
  ExactPoly b = divide_exact(p, a);
  ExactPoly c = divide_exact(p.derivative(), a);
  ExactPoly d = c - b.derivative();
  while (b.degree() > 0) {
    ExactPoly g = poly_gcd(b, d);
    out.push_back(g);
    b = divide_exact(b, g);
    c = divide_exact(d, g);
    d = c - b.derivative();
  }
  return out;
}

ExactPoly hadamard(const ExactPoly& f, const ExactPoly& g) {
  const long d = std::min(f.degree(), g.degree());
  std::vector<BigCount> out;
  for (long i = 0; i <= d; ++i) out.push_back(f.coeff(i) * g.coeff(i));
  return ExactPoly(std::move(out));
}

}  // namespace dyck
