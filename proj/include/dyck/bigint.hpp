#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "dyck/error.hpp"

namespace dyck {

using BigCount = mpz_class;
using BigRational = mpq_class;

// Divides and insists on a zero remainder; every closed form in this library
// multiplies first and divides last, so a remainder means a transcription bug.
inline BigCount exact_div(const BigCount& num, const BigCount& den, std::string_view where) {
  if (den == 0) throw Error(Errc::inexact_division, std::string(where) + ": division by zero");
  BigCount q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  if (r != 0) {
    throw Error(Errc::inexact_division,
                std::string(where) + ": " + num.get_str() + " / " + den.get_str());
  }
  return q;
}

inline std::string to_string(const BigCount& v) { return v.get_str(); }

}  // namespace dyck
