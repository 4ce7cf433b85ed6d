#pragma once

#include <string>
#include <vector>

#include "dyck/poly.hpp"

namespace dyck {

// sum_m w(n, k, m) t^m.
ExactPoly w_poly(long n, long k);
ExactPoly narayana_poly(long k);
ExactPoly gen_narayana_poly(long k, long r);
// sum_{i=0}^{k-j} (j+1)/(k+1) C(k+1, i) C(k+1, i+j+1) t^i.
ExactPoly bar_narayana_poly(long k, long j);

struct GammaExpansion {
  long center = 0;
  std::vector<BigCount> gammas;  // gammas[j] multiplies t^j (1+t)^(center-2j)

  ExactPoly reconstruct() const;
  bool positive() const;
};

// Peels the gamma coefficients from the outside in. Throws NotSymmetric when f
// is not symmetric about `center`.
GammaExpansion gamma_expansion(const ExactPoly& f, long center);

struct Decomposition {
  ExactPoly plus;
  ExactPoly minus;
  char case_tag = '?';          // 'a', 'b' or 'c'
  std::vector<BigCount> raw_plus;   // signed w+_i, i = 0..k
  std::vector<BigCount> raw_minus;  // signed w-_i, i = 0..k

  // The case equation applied to plus and minus.
  ExactPoly recompose() const;
};

// Splits W_{n,k} into two symmetric nonnegative parts. Throws InvalidArgument
// unless 1 <= k <= n, and DecompositionBug if a checked property fails.
Decomposition symmetric_decomposition(long n, long k);

}  // namespace dyck
