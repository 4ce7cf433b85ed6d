#pragma once

#include <vector>

#include "dyck/poly.hpp"

namespace dyck {

// Sturm chain f, f', -rem, ... with each member reduced to its primitive part
// (positive scaling only, so signs are preserved).
std::vector<ExactPoly> sturm_chain(const ExactPoly& f);

// Sign changes of the chain at x, zeros skipped.
int sign_variations(const std::vector<ExactPoly>& chain, const BigRational& x);

// 1 + max |c_i / c_d|; every real root lies strictly inside (-B, B).
BigRational cauchy_bound(const ExactPoly& f);

// Distinct real roots. Throws ZeroPolynomial.
int sturm_distinct_real_roots(const ExactPoly& f);

// Constants count as real-rooted. Throws ZeroPolynomial.
bool is_real_rooted(const ExactPoly& f);

// Half-open interval (lo, hi] holding exactly one root; endpoints are never roots.
struct RootInterval {
  BigRational lo, hi;
};

// Isolating intervals for the distinct real roots, in increasing order.
std::vector<RootInterval> isolate_real_roots(const ExactPoly& f);

// g -> f: the roots of g weakly interlace those of f, with deg f = deg g + 1
// or deg f = deg g. A constant g interlaces everything. Throws
// NotRealRooted when either input has a non-real root, ZeroPolynomial on 0.
bool interlaces(const ExactPoly& g, const ExactPoly& f);

// Equal squarefree parts up to a rational scalar. Throws ZeroPolynomial.
bool same_root_set(const ExactPoly& f, const ExactPoly& g);

}  // namespace dyck
