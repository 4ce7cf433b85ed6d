#include "dyck/series.hpp"

#include <sstream>

#include "dyck/counting.hpp"
#include "dyck/error.hpp"

namespace dyck {

TriSeries::TriSeries(int order) : order_(order) {
  if (order < 0) throw Error(Errc::invalid_argument, "series order must be nonnegative");
}

TriSeries TriSeries::constant(int order, const BigCount& c) { return monomial(order, {0, 0, 0}, c); }

TriSeries TriSeries::monomial(int order, Exponent e, const BigCount& c) {
  TriSeries s(order);
  s.add_term(e, c);
  return s;
}

BigCount TriSeries::coefficient(Exponent e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? BigCount(0) : it->second;
}

void TriSeries::add_term(Exponent e, const BigCount& c) {
  if (e[0] > order_ || c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void TriSeries::require_same_order(const TriSeries& o) const {
  if (o.order_ != order_) {
    throw Error(Errc::order_mismatch,
                "truncation orders differ: " + std::to_string(order_) + " vs " + std::to_string(o.order_));
  }
}

TriSeries& TriSeries::operator+=(const TriSeries& o) {
  require_same_order(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

TriSeries& TriSeries::operator-=(const TriSeries& o) {
  require_same_order(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

TriSeries operator*(const TriSeries& a, const TriSeries& b) {
  a.require_same_order(b);
  TriSeries out(a.order_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      if (ea[0] + eb[0] > out.order_) continue;
      out.add_term({ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]}, ca * cb);
    }
  }
  return out;
}

TriSeries TriSeries::scale_monomial(Exponent e, const BigCount& c) const {
  TriSeries out(order_);
  for (const auto& [ex, cx] : terms_) out.add_term({ex[0] + e[0], ex[1] + e[1], ex[2] + e[2]}, cx * c);
  return out;
}

std::string TriSeries::csv() const {
  std::ostringstream os;
  os << "n,k,m,coefficient\n";
  for (const auto& [e, c] : terms_) os << e[0] << ',' << e[1] << ',' << e[2] << ',' << c.get_str() << '\n';
  return os.str();
}

TriSeries solve_functional_equation(int order) {
  const TriSeries one = TriSeries::constant(order, 1);
  const TriSeries xy = TriSeries::monomial(order, {1, 1, 0});
  TriSeries w = one;
  // Each pass fixes one more power of x; one extra pass confirms stability.
  for (int pass = 0; pass <= order + 1; ++pass) {
    const TriSeries v = xy + w.scale_monomial({2, 1, 1}) + (w - one - w.scale_monomial({1, 1, 0})).scale_monomial({1, 0, 0});
    TriSeries next = one + v * w;
    if (next == w) break;
    w = std::move(next);
  }
  return w;
}

TriSeries residual(const TriSeries& w) {
  const int n = w.order();
  TriSeries u = TriSeries::monomial(n, {1, 0, 0});
  u.add_term({2, 1, 0}, -1);
  u.add_term({2, 1, 1}, 1);
  TriSeries v = TriSeries::constant(n, 1);
  v.add_term({1, 0, 0}, 1);
  v.add_term({1, 1, 0}, -1);
  return u * w * w - v * w + TriSeries::constant(n, 1);
}

TriSeries series_from_formula(int order) {
  TriSeries w(order);
  for (int n = 0; n <= order; ++n)
    for (int k = 0; k <= n; ++k)
      for (int m = 0; m <= k; ++m) w.add_term({n, k, m}, w_formula(n, k, m));
  return w;
}

bool respects_support(const TriSeries& w) {
  for (const auto& [e, c] : w.terms()) {
    const auto [n, k, m] = e;
    if (m == 0 && n == k) continue;
    if (m > k || k + m > n) return false;
  }
  return true;
}

}  // namespace dyck
