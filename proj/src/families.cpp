#include "dyck/families.hpp"

#include <algorithm>

#include "dyck/counting.hpp"
#include "dyck/error.hpp"

namespace dyck {

ExactPoly w_poly(long n, long k) {
  std::vector<BigCount> c;
  for (long m = 0; m <= std::max(k, 0L); ++m) c.push_back(w_formula(n, k, m));
  return ExactPoly(std::move(c));
}

ExactPoly narayana_poly(long k) {
  std::vector<BigCount> c;
  for (long m = 0; m <= k; ++m) c.push_back(narayana(k, m));
  return ExactPoly(std::move(c));
}

ExactPoly gen_narayana_poly(long k, long r) {
  std::vector<BigCount> c;
  for (long m = 0; m <= k - r; ++m) c.push_back(gen_narayana(k, m, r));
  return ExactPoly(std::move(c));
}

ExactPoly bar_narayana_poly(long k, long j) {
  std::vector<BigCount> c;
  for (long i = 0; i <= k - j; ++i) {
    c.push_back(exact_div(BigCount(j + 1) * binomial(k + 1, i) * binomial(k + 1, i + j + 1), k + 1,
                          "bar_narayana_poly"));
  }
  return ExactPoly(std::move(c));
}

namespace {

ExactPoly gamma_basis(long j, long center) {
  return ExactPoly{0, 1}.pow(static_cast<unsigned>(j)) * ExactPoly{1, 1}.pow(static_cast<unsigned>(center - 2 * j));
}

}  // namespace

ExactPoly GammaExpansion::reconstruct() const {
  ExactPoly out;
  for (std::size_t j = 0; j < gammas.size(); ++j) out += gamma_basis(static_cast<long>(j), center) * gammas[j];
  return out;
}

bool GammaExpansion::positive() const {
  return std::all_of(gammas.begin(), gammas.end(), [](const BigCount& g) { return g >= 0; });
}

GammaExpansion gamma_expansion(const ExactPoly& f, long center) {
  if (center < 0 || !f.symmetric_about(center))
    throw Error(Errc::not_symmetric, f.str() + " is not symmetric about degree " + std::to_string(center));
  GammaExpansion g;
  g.center = center;
  ExactPoly rest = f;
  for (long j = 0; 2 * j <= center; ++j) {
    const BigCount gj = rest.coeff(j);
    g.gammas.push_back(gj);
    if (gj != 0) rest -= gamma_basis(j, center) * gj;
  }
  if (!rest.is_zero()) throw Error(Errc::not_symmetric, "gamma peel left a remainder " + rest.str());
  return g;
}

ExactPoly Decomposition::recompose() const {
  const ExactPoly t_minus = minus.shifted(1);
  switch (case_tag) {
    case 'a': return plus - t_minus;
    case 'b': return plus + t_minus;
    default: return t_minus - plus;
  }
}

Decomposition symmetric_decomposition(long n, long k) {
  if (k < 1 || k > n)
    throw Error(Errc::invalid_argument, "decomposition needs 1 <= k <= n, got n=" + std::to_string(n) +
                                            " k=" + std::to_string(k));
  const ExactPoly w = w_poly(n, k);
  std::vector<BigCount> wm(static_cast<std::size_t>(k) + 1);
  for (long m = 0; m <= k; ++m) wm[static_cast<std::size_t>(m)] = w.coeff(m);

  // low[i] = w_0 + ... + w_i, high[i] = w_k + ... + w_{k-i}.
  std::vector<BigCount> low(wm.size()), high(wm.size());
  for (std::size_t i = 0; i < wm.size(); ++i) {
    low[i] = wm[i] + (i ? low[i - 1] : BigCount(0));
    high[i] = wm[wm.size() - 1 - i] + (i ? high[i - 1] : BigCount(0));
  }

  Decomposition dec;
  dec.raw_plus.assign(wm.size(), 0);
  dec.raw_minus.assign(wm.size(), 0);
  dec.raw_plus[0] = (k == n) ? 1 : 0;
  for (std::size_t i = 0; i + 1 < wm.size(); ++i) dec.raw_plus[i + 1] = low[i + 1] - high[i];
  for (std::size_t i = 0; i < wm.size(); ++i) dec.raw_minus[i] = high[i] - low[i];

  std::vector<BigCount> plus, minus;
  for (const auto& c : dec.raw_plus) plus.push_back(abs(c));
  for (const auto& c : dec.raw_minus) minus.push_back(abs(c));
  dec.plus = ExactPoly(std::move(plus));
  dec.minus = ExactPoly(std::move(minus));

  const long top = w.degree();
  if (n == top + k)
    dec.case_tag = top != k ? 'a' : 'b';
  else if (n > top + k)
    dec.case_tag = 'c';
  else
    throw Error(Errc::decomposition_bug, "degree exceeds n - k");

  const std::string at = " at n=" + std::to_string(n) + " k=" + std::to_string(k);
  if (!dec.plus.symmetric_about(k)) throw Error(Errc::decomposition_bug, "plus part not symmetric" + at);
  if (dec.minus.coeff(k) != 0 || !dec.minus.symmetric_about(k - 1))
    throw Error(Errc::decomposition_bug, "minus part not symmetric" + at);
  if (dec.recompose() != w) throw Error(Errc::decomposition_bug, "parts do not recombine" + at);
  return dec;
}

}  // namespace dyck
