#include "dyck/conjectures.hpp"

#include <chrono>

#include "dyck/counting.hpp"
#include "dyck/error.hpp"
#include "dyck/families.hpp"
#include "dyck/roots.hpp"

namespace dyck {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

void record(ConjectureReport& rep, Verdict v) {
  if (!v.pass && !rep.counterexample) rep.counterexample = nlohmann::json{{"instance", v.instance}, {"detail", v.detail}};
  rep.verdicts.push_back(std::move(v));
}

// Interlacing that reports failure instead of throwing on non-real-rooted input.
bool safe_interlaces(const ExactPoly& g, const ExactPoly& f) {
  try {
    return interlaces(g, f);
  } catch (const Error&) {
    return false;
  }
}

nlohmann::json poly_json(const ExactPoly& p) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(c.get_str());
  return {{"coefficients", coeffs}, {"text", p.str()}};
}

}  // namespace

bool ConjectureReport::all_pass() const { return failures() == 0; }

std::size_t ConjectureReport::failures() const {
  std::size_t n = 0;
  for (const auto& v : verdicts) n += v.pass ? 0 : 1;
  return n;
}

nlohmann::json ConjectureReport::to_json() const {
  nlohmann::json out{{"id", id}, {"name", name}, {"range", range}, {"all_pass", all_pass()},
                     {"wall_time_s", wall_time_s}};
  nlohmann::json vs = nlohmann::json::array();
  for (const auto& v : verdicts) vs.push_back({{"instance", v.instance}, {"pass", v.pass}, {"detail", v.detail}});
  out["verdicts"] = vs;
  out["counterexample"] = counterexample ? *counterexample : nlohmann::json(nullptr);
  return out;
}

ConjectureReport check_sturm_sequence(long k, long n_max) {
  if (k < 1 || n_max < k) throw Error(Errc::invalid_argument, "need k >= 1 and n_max >= k");
  const auto start = Clock::now();
  ConjectureReport rep;
  rep.id = 1;
  rep.name = "sturm-sequence";
  rep.range = {{"k", k}, {"n_min", k}, {"n_max", n_max}};
  for (long n = k; n < n_max; ++n) {
    const ExactPoly g = w_poly(n, k), f = w_poly(n + 1, k);
    Verdict v;
    v.instance = "W(" + std::to_string(n) + "," + std::to_string(k) + ") -> W(" + std::to_string(n + 1) + "," +
                 std::to_string(k) + ")";
    v.pass = safe_interlaces(g, f);
    v.detail = {{"g", poly_json(g)}, {"f", poly_json(f)}};
    record(rep, std::move(v));
  }
  rep.wall_time_s = seconds_since(start);
  return rep;
}

ConjectureReport check_sturm_unimodal(long n) {
  if (n < 1) throw Error(Errc::invalid_argument, "need n >= 1");
  const auto start = Clock::now();
  ConjectureReport rep;
  rep.id = 2;
  rep.name = "sturm-unimodal";
  rep.range = {{"n", n}};

  std::vector<ExactPoly> f;
  for (long k = 1; k <= n; ++k) f.push_back(w_poly(n, k));
  // rising[i]: f_i -> f_{i+1}; falling[i]: f_i <- f_{i+1} (0-based i).
  std::vector<bool> rising, falling;
  for (std::size_t i = 0; i + 1 < f.size(); ++i) {
    rising.push_back(safe_interlaces(f[i], f[i + 1]));
    falling.push_back(safe_interlaces(f[i + 1], f[i]));
  }
  long pivot = 0;
  for (std::size_t j = 0; j < f.size() && pivot == 0; ++j) {
    bool ok = true;
    for (std::size_t i = 0; i < j && ok; ++i) ok = rising[i];
    for (std::size_t i = j; i + 1 < f.size() && ok; ++i) ok = falling[i];
    if (ok) pivot = static_cast<long>(j) + 1;
  }
  Verdict v;
  v.instance = "n=" + std::to_string(n);
  v.pass = pivot != 0;
  nlohmann::json polys = nlohmann::json::array();
  for (const auto& p : f) polys.push_back(poly_json(p));
  v.detail = {{"pivot_k", pivot == 0 ? nlohmann::json(nullptr) : nlohmann::json(pivot)},
              {"rising", rising},
              {"falling", falling},
              {"polynomials", polys}};
  record(rep, std::move(v));
  rep.wall_time_s = seconds_since(start);
  return rep;
}

std::set<long> predicted_realrooted_ks(long n) {
  std::set<long> raw;
  const long h = n / 2;
  if (n == 1 || n == 2)
    raw = {1};
  else if (n % 4 == 1)
    raw = {1, 2, h - 1, h, h + 1};
  else if (n % 4 == 3)
    raw = {1, 2, h - 1, h, h + 1, h + 2};
  else if (n == 10 || n == 12 || n == 16)
    raw = {1, 2, h - 2, h - 1, h, h + 1};
  else
    raw = {1, 2, h - 1, h, h + 1};
  std::set<long> out;
  for (long k : raw)
    if (k >= 1 && k <= n) out.insert(k);
  return out;
}

ConjectureReport check_realroot_characterization(long n_max) {
  if (n_max < 1) throw Error(Errc::invalid_argument, "need n_max >= 1");
  const auto start = Clock::now();
  ConjectureReport rep;
  rep.id = 3;
  rep.name = "realroot-characterization";
  rep.range = {{"n_min", 1}, {"n_max", n_max}};
  auto real_rooted = [](const ExactPoly& p) { return p.is_zero() || is_real_rooted(p); };
  for (long n = 1; n <= n_max; ++n) {
    std::set<long> observed;
    nlohmann::json parts = nlohmann::json::array();
    for (long k = 1; k <= n; ++k) {
      const Decomposition dec = symmetric_decomposition(n, k);
      const bool plus_rr = real_rooted(dec.plus), minus_rr = real_rooted(dec.minus);
      if (plus_rr && minus_rr) observed.insert(k);
      parts.push_back({{"k", k},
                       {"case", std::string(1, dec.case_tag)},
                       {"plus", poly_json(dec.plus)},
                       {"minus", poly_json(dec.minus)},
                       {"plus_real_rooted", plus_rr},
                       {"minus_real_rooted", minus_rr}});
    }
    const std::set<long> predicted = predicted_realrooted_ks(n);
    Verdict v;
    v.instance = "n=" + std::to_string(n);
    v.pass = observed == predicted;
    v.detail = {{"observed", observed}, {"predicted", predicted}};
    if (!v.pass) v.detail["parts"] = parts;
    record(rep, std::move(v));
  }
  rep.wall_time_s = seconds_since(start);
  return rep;
}

ConjectureReport check_w2k_formulas(long k_max) {
  if (k_max < 2) throw Error(Errc::invalid_argument, "need k_max >= 2");
  const auto start = Clock::now();
  ConjectureReport rep;
  rep.id = 4;
  rep.name = "w2k-decomposition-formulas";
  rep.range = {{"k_min", 2}, {"k_max", k_max}};
  for (long k = 2; k <= k_max; ++k) {
    const BigCount ck = catalan(k);
    const Decomposition mid = symmetric_decomposition(2 * k, k);
    const Decomposition above = symmetric_decomposition(2 * k, k + 1);
    const Decomposition below = symmetric_decomposition(2 * k, k - 1);

    const ExactPoly plus_mid = narayana_poly(k - 1) * BigCount((k - 1) * ck);
    std::vector<BigCount> sq;
    for (long i = 0; i <= k - 1; ++i) sq.push_back(ck * binomial(k - 1, i) * binomial(k - 1, i));
    const ExactPoly minus_mid(std::move(sq));
    const ExactPoly minus_above = narayana_poly(k - 1) * binomial(2 * k, k);

    // -(t/2) C(2k, k-2) barNar^{(1)}_{k-2}(t); the 1/(k-1) inside barNar and
    // the 1/2 are cleared by comparing 2(k-1) times each side.
    std::vector<BigCount> bar;
    for (long i = 0; i <= k - 3; ++i) bar.push_back(BigCount(2) * binomial(k - 1, i) * binomial(k - 1, i + 2));
    const ExactPoly rhs_scaled = -(ExactPoly(std::move(bar)) * binomial(2 * k, k - 2)).shifted(1);
    const BigCount scale = 2 * (k - 1);
    const ExactPoly raw_plus_below(below.raw_plus);
    const bool b2_abs = below.plus * scale == rhs_scaled;
    const bool b2_signed = raw_plus_below * scale == rhs_scaled;

    Verdict v;
    v.instance = "k=" + std::to_string(k);
    const bool a1 = mid.plus == plus_mid, a2 = mid.minus == minus_mid, b1 = above.minus == minus_above;
    v.pass = a1 && a2 && b1 && (b2_abs || b2_signed);
    v.detail = {{"a_plus", a1},
                {"a_minus", a2},
                {"b_minus", b1},
                {"b_plus_matches_absolute", b2_abs},
                {"b_plus_matches_signed", b2_signed},
                {"b_plus_sign_convention", b2_signed && !b2_abs   ? "signed"
                                           : b2_abs && !b2_signed ? "absolute"
                                           : b2_abs && b2_signed  ? "both"
                                                                  : "neither"},
                {"W_plus_2k_k", poly_json(mid.plus)},
                {"W_minus_2k_k", poly_json(mid.minus)},
                {"W_minus_2k_k+1", poly_json(above.minus)},
                {"W_plus_2k_k-1", poly_json(below.plus)},
                {"w_plus_2k_k-1_signed", poly_json(raw_plus_below)}};
    record(rep, std::move(v));
  }
  rep.wall_time_s = seconds_since(start);
  return rep;
}

}  // namespace dyck
