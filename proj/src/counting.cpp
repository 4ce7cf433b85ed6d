#include "dyck/counting.hpp"

#include <numeric>

#include "dyck/compositions.hpp"
#include "dyck/error.hpp"

namespace dyck {

BigCount binomial(long n, long k) {
  if (n == -1 && k == -1) return 1;
  if (k < 0 || n < 0 || k > n) return 0;
  BigCount out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

BigCount factorial(long n) {
  if (n < 0) throw Error(Errc::invalid_argument, "factorial of a negative number");
  BigCount out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

BigCount catalan(long n) {
  if (n < 0) return 0;
  return exact_div(binomial(2 * n, n), n + 1, "catalan");
}

BigCount narayana(long n, long k) {
  if (n == 0 && k == 0) return 1;
  if (n < 1 || k < 1 || k > n) return 0;
  return exact_div(binomial(n, k) * binomial(n, k - 1), n, "narayana");
}

BigCount gen_narayana(long n, long k, long r) {
  if (r < 0 || r > n || k < 0 || k > n - r) return 0;
  return exact_div(BigCount(r + 1) * binomial(n + 1, k) * binomial(n - r - 1, k - 1), n + 1, "gen_narayana");
}

BigCount w_formula(long n, long k, long m) {
  if (m == 0 && n == k && n >= 0) return 1;
  if (m <= 0 || m > k || k + m > n) return 0;
  return exact_div(binomial(n, k - 1) * binomial(n - k - 1, m - 1) * binomial(k, m), k, "w_formula");
}

BigCount multinomial(long k, std::span<const long> parts) {
  BigCount den = 1;
  long sum = 0;
  for (long p : parts) {
    if (p < 0) return 0;
    den *= factorial(p);
    sum += p;
  }
  if (sum != k) throw Error(Errc::invalid_argument, "multinomial parts do not sum to the top");
  return exact_div(factorial(k), den, "multinomial");
}

BigCount w_formula_multi(long n, std::span<const long> ks) {
  if (ks.empty()) throw Error(Errc::invalid_argument, "need at least one factor count");
  const std::size_t r = ks.size();
  for (std::size_t i = 0; i < r; ++i) {
    if (ks[i] < 0) return 0;
    if (i && ks[i] > ks[i - 1]) return 0;
  }
  const long k1 = ks[0];
  if (k1 == 0) return n == 0 ? 1 : 0;
  const long total = std::accumulate(ks.begin(), ks.end(), 0L);
  if (n < total) return 0;
  const long k_hat = total - ks[r - 1];

  std::vector<long> gaps;
  for (std::size_t i = 0; i + 1 < r; ++i) gaps.push_back(ks[i] - ks[i + 1]);
  gaps.push_back(ks[r - 1]);
  const BigCount arrangements = multinomial(k1, gaps);

  BigCount num;
  if (ks[r - 1] > 0)
    num = binomial(n, k1 - 1) * binomial(n - k_hat - 1, ks[r - 1] - 1) * arrangements;
  else if (n == k_hat)
    num = binomial(n, k1 - 1) * arrangements;
  else
    return 0;
  return exact_div(num, k1, "w_formula_multi");
}

std::vector<Identity> w_identities(long k, long m, long j) {
  std::vector<Identity> out;
  if (k < 1) return out;
  const std::string at = "(k=" + std::to_string(k) + ",m=" + std::to_string(m) + ",j=" + std::to_string(j) + ")";
  out.push_back({"odd-plus " + at, w_formula(2 * k + 1, k, m), binomial(2 * k + 1, k - 1) * narayana(k, m)});
  out.push_back({"odd-minus " + at, w_formula(2 * k - 1, k, m), binomial(2 * k - 1, k - 1) * narayana(k - 1, m)});
  if (j >= 1) {
    out.push_back({"general-plus " + at, w_formula(2 * k + j, k, m),
                   exact_div(binomial(2 * k + j, k - 1) * gen_narayana(k + j - 1, m, j - 1), j, "general-plus")});
  }
  if (j >= 1 && j <= k) {
    out.push_back({"general-minus " + at, w_formula(2 * k - j, k, m),
                   exact_div(binomial(2 * k - j, k - 1) * gen_narayana(k - 1, m, j - 1), j, "general-minus")});
  }
  return out;
}

std::vector<long> divisors(long n) {
  std::vector<long> out;
  for (long d = 1; d <= n; ++d)
    if (n % d == 0) out.push_back(d);
  return out;
}

long totient(long n) {
  if (n < 1) throw Error(Errc::invalid_argument, "totient needs a positive argument");
  long result = n;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

int mobius(long n) {
  if (n < 1) throw Error(Errc::invalid_argument, "mobius needs a positive argument");
  int sign = 1;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    sign = -sign;
  }
  if (n > 1) sign = -sign;
  return sign;
}

BigCount ccomp_count(long k, long m, long j, Sign sign) {
  if (k < 1 || m < 0 || j < 0) throw Error(Errc::invalid_argument, "ccomp_count needs k >= 1 and m, j >= 0");
  if (sign == Sign::zero) j = 0;
  if (sign != Sign::zero && j == 0) throw Error(Errc::invalid_argument, "plus/minus counts need j >= 1");
  if (sign == Sign::minus && j > k) throw Error(Errc::invalid_argument, "minus count needs j <= k");

  // gcd over the nonzero entries; std::gcd(x, 0) = x does exactly that.
  const long d = std::gcd(std::gcd(k, m), j);
  BigCount sum = 0;
  for (long s : divisors(d)) {
    BigCount term;
    switch (sign) {
      case Sign::plus: term = gen_narayana((k + j) / s - 1, m / s, j / s - 1); break;
      case Sign::minus: term = gen_narayana(k / s - 1, m / s, j / s - 1); break;
      case Sign::zero: term = binomial(k / s - 1, m / s - 1) * binomial(k / s, m / s); break;
    }
    sum += totient(s) * term;
  }
  return exact_div(sum, sign == Sign::zero ? k : j, "ccomp_count");
}

BigCount catalan_via_primitive(long n) {
  if (n < 1) throw Error(Errc::invalid_argument, "catalan_via_primitive needs n >= 1");
  BigRational sum = 0;
  for (long d : divisors(n)) {
    const long part = n / d;
    for (long parts = 1; parts <= part; ++parts) {
      for (const auto& cc : enumerate_cyclic_compositions(static_cast<int>(part), static_cast<int>(parts))) {
        if (!cc.primitive()) continue;
        sum += BigRational(binomial(n, static_cast<long>(cc.order()) * d - 1), BigCount(d));
      }
    }
  }
  sum.canonicalize();
  if (sum.get_den() != 1) throw Error(Errc::inexact_division, "primitive-class sum is not an integer");
  return sum.get_num();
}

}  // namespace dyck
