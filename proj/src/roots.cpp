#include "dyck/roots.hpp"

#include <algorithm>

#include "dyck/error.hpp"

namespace dyck {

namespace {

// Divides by the (positive) content, keeping the sign pattern intact.
ExactPoly positive_primitive(const ExactPoly& p) {
  const BigCount c = p.content();
  std::vector<BigCount> v = p.coeffs();
  for (auto& x : v) x = exact_div(x, c, "sturm chain");
  return ExactPoly(std::move(v));
}

}  // namespace

std::vector<ExactPoly> sturm_chain(const ExactPoly& f) {
  if (f.is_zero()) throw Error(Errc::zero_polynomial, "Sturm chain of zero");
  std::vector<ExactPoly> chain{positive_primitive(f)};
  ExactPoly next = f.derivative();
  if (next.is_zero()) return chain;
  chain.push_back(positive_primitive(next));
  while (true) {
    const ExactPoly& a = chain[chain.size() - 2];
    const ExactPoly& b = chain.back();
    ExactPoly r = pseudo_remainder(a, b);
    // prem = lc(b)^e * rem; undo a negative factor, then flip for the chain.
    const long e = a.degree() - b.degree() + 1;
    if (b.leading() < 0 && (e % 2)) r = -r;
    r = -r;
    if (r.is_zero()) break;
    chain.push_back(positive_primitive(r));
  }
  return chain;
}

int sign_variations(const std::vector<ExactPoly>& chain, const BigRational& x) {
  int variations = 0, last = 0;
  for (const auto& p : chain) {
    const int s = p.sign_at(x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++variations;
    last = s;
  }
  return variations;
}

BigRational cauchy_bound(const ExactPoly& f) {
  if (f.is_zero()) throw Error(Errc::zero_polynomial, "root bound of zero");
  BigRational best = 0;
  const BigCount lead = abs(f.leading());
  for (long i = 0; i < f.degree(); ++i) {
    BigRational r(abs(f.coeff(i)), lead);
    r.canonicalize();
    if (r > best) best = r;
  }
  return best + 1;
}

int sturm_distinct_real_roots(const ExactPoly& f) {
  if (f.is_zero()) throw Error(Errc::zero_polynomial, "root count of zero");
  if (f.degree() == 0) return 0;
  const auto chain = sturm_chain(f);
  const BigRational b = cauchy_bound(f);
  return sign_variations(chain, -b) - sign_variations(chain, b);
}

bool is_real_rooted(const ExactPoly& f) {
  if (f.is_zero()) throw Error(Errc::zero_polynomial, "real-rootedness of zero");
  const ExactPoly s = squarefree_part(f);
  return sturm_distinct_real_roots(s) == s.degree();
}

namespace {

struct Isolator {
  const ExactPoly& f;
  std::vector<ExactPoly> chain;
  std::vector<RootInterval> out;

  int count(const BigRational& lo, const BigRational& hi) const {
    return sign_variations(chain, lo) - sign_variations(chain, hi);
  }

  // A split point strictly inside (lo, hi) that is not a root.
  BigRational split(const BigRational& lo, const BigRational& hi) const {
    for (long den = 2;; ++den) {
      for (long num = 1; num < den; ++num) {
        BigRational t = lo + (hi - lo) * BigRational(num, den);
        t.canonicalize();
        if (f.sign_at(t) != 0) return t;
      }
    }
  }

  void run(const BigRational& lo, const BigRational& hi, int roots) {
    if (roots == 0) return;
    if (roots == 1) {
      out.push_back({lo, hi});
      return;
    }
    const BigRational mid = split(lo, hi);
    const int left = count(lo, mid);
    run(lo, mid, left);
    run(mid, hi, roots - left);
  }
};

}  // namespace

std::vector<RootInterval> isolate_real_roots(const ExactPoly& f) {
  if (f.is_zero()) throw Error(Errc::zero_polynomial, "root isolation of zero");
  const ExactPoly s = squarefree_part(f);
  if (s.degree() <= 0) return {};
  Isolator iso{s, sturm_chain(s), {}};
  const BigRational b = cauchy_bound(s);
  iso.run(-b, b, iso.count(-b, b));
  return iso.out;
}

namespace {

// Roots of f in decreasing order, as indices into the isolating intervals of
// the combined squarefree part, repeated by multiplicity.
std::vector<std::size_t> ranked_roots(const ExactPoly& f, const std::vector<RootInterval>& intervals) {
  std::vector<std::size_t> ranks;
  const auto factors = squarefree_factors(f);
  for (std::size_t idx = intervals.size(); idx-- > 0;) {
    const auto& iv = intervals[idx];
    for (std::size_t mult = 0; mult < factors.size(); ++mult) {
      const ExactPoly& a = factors[mult];
      if (a.degree() < 1) continue;
      if (a.sign_at(iv.lo) * a.sign_at(iv.hi) < 0) {
        ranks.insert(ranks.end(), mult + 1, idx);
        break;
      }
    }
  }
  return ranks;
}

}  // namespace

bool interlaces(const ExactPoly& g, const ExactPoly& f) {
  if (f.is_zero() || g.is_zero()) throw Error(Errc::zero_polynomial, "interlacing with the zero polynomial");
  if (!is_real_rooted(f) || !is_real_rooted(g))
    throw Error(Errc::not_real_rooted, "interlacing needs real-rooted inputs");
  if (g.degree() == 0) return true;
  const long d = f.degree();
  if (d != g.degree() + 1 && d != g.degree()) return false;

  const auto intervals = isolate_real_roots(f * g);
  const auto u = ranked_roots(f, intervals);  // u[0] is the largest root of f
  const auto v = ranked_roots(g, intervals);
  if (static_cast<long>(u.size()) != d || static_cast<long>(v.size()) != g.degree())
    throw Error(Errc::not_real_rooted, "root multiplicities do not add up");

  // u_1 >= v_1 >= u_2 >= v_2 >= ... (1-based), plus v_d <= u_d when degrees agree.
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] > u[i]) return false;
    if (i + 1 < u.size() && u[i + 1] > v[i]) return false;
  }
  return true;
}

bool same_root_set(const ExactPoly& f, const ExactPoly& g) {
  if (f.is_zero() || g.is_zero()) throw Error(Errc::zero_polynomial, "root set of zero");
  return squarefree_part(f) == squarefree_part(g);
}

}  // namespace dyck
