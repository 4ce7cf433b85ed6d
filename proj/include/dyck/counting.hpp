#pragma once

#include <span>
#include <string>
#include <vector>

#include "dyck/bigint.hpp"

namespace dyck {

// C(n, k) with C(n, k) = 0 for k < 0 or k > n, except C(-1, -1) = 1.
BigCount binomial(long n, long k);
BigCount factorial(long n);
BigCount catalan(long n);

// Dyck words of semilength n with k peaks; N(0, 0) = 1.
BigCount narayana(long n, long k);
// Paths with n up and n-r down steps staying weakly above the axis, k peaks.
BigCount gen_narayana(long n, long k, long r);

// Dyck words of semilength n with k UD- and m UUD-factors.
BigCount w_formula(long n, long k, long m);
// Same with k_i U^iD-factors for each i <= ks.size().
BigCount w_formula_multi(long n, std::span<const long> ks);

// k! / (parts_1! parts_2! ...); the parts must sum to k.
BigCount multinomial(long k, std::span<const long> parts);

struct Identity {
  std::string name;
  BigCount lhs;
  BigCount rhs;
  bool holds() const { return lhs == rhs; }
};

// Both sides of the relations between w-numbers and (generalized) Narayana
// numbers at (k, m, j). Identities whose range excludes (k, j) are skipped.
std::vector<Identity> w_identities(long k, long m, long j);

long totient(long n);
int mobius(long n);
std::vector<long> divisors(long n);

enum class Sign { plus, minus, zero };

// Number of cyclic compositions of 2k+j (plus), 2k-j (minus) or 2k (zero)
// into k parts with exactly m parts >= 2.
BigCount ccomp_count(long k, long m, long j, Sign sign);

// Catalan number assembled from primitive cyclic compositions of divisors.
BigCount catalan_via_primitive(long n);

}  // namespace dyck
