#include "dyck/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <iterator>
#include <json.hpp>
#include <sstream>

#include "dyck/conjectures.hpp"
#include "dyck/counting.hpp"
#include "dyck/error.hpp"
#include "dyck/families.hpp"
#include "dyck/roots.hpp"
#include "dyck/series.hpp"
#include "dyck/symmetry.hpp"
#include "dyck/trees.hpp"
#include "dyck/verify.hpp"
#include "dyck/words.hpp"

namespace dyck {

namespace {

using json = nlohmann::json;

constexpr int exit_ok = 0;
constexpr int exit_failure = 1;
constexpr int exit_usage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Writes to --out when given, otherwise to the command's stdout.
void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot open output file " + path);
  file << text;
}

std::string table_csv(long n_max) {
  std::ostringstream s;
  s << "n,k,m,w\n";
  for (long n = 0; n <= n_max; ++n)
    for (long k = 0; k <= n; ++k)
      for (long m = 0; m <= k; ++m) {
        const BigCount w = w_formula(n, k, m);
        if (w != 0) s << n << ',' << k << ',' << m << ',' << w.get_str() << '\n';
      }
  return s.str();
}

std::string table_json(long n_max) {
  json rows = json::array();
  for (long n = 0; n <= n_max; ++n)
    for (long k = 0; k <= n; ++k)
      for (long m = 0; m <= k; ++m) {
        const BigCount w = w_formula(n, k, m);
        if (w != 0) rows.push_back({{"n", n}, {"k", k}, {"m", m}, {"w", w.get_str()}});
      }
  return rows.dump(2) + "\n";
}

json poly_json(const ExactPoly& p) {
  json c = json::array();
  for (const auto& x : p.coeffs()) c.push_back(x.get_str());
  return {{"coefficients", c}, {"text", p.str()}};
}

json tree_json(const PlaneTree& t) { return {{"parens", t.parens()}, {"word", phi_inv(t).str()}}; }

json trace_json(const SymmetryTrace& tr) {
  const LeafStats in = leaf_stats(tr.input), out = leaf_stats(tr.output);
  return {{"k", in.leaves},
          {"m_in", in.good_leaves},
          {"m_out", out.good_leaves},
          {"input", tree_json(tr.input)},
          {"marked_necklace", tr.marked.str()},
          {"necklace", tr.necklace},
          {"marked_positions", tr.positions},
          {"path", tr.path.str()},
          {"swapped_path", tr.swapped.str()},
          {"new_necklace", tr.new_necklace},
          {"new_marked_necklace", tr.new_marked.str()},
          {"output", tree_json(tr.output)}};
}

std::string trace_text(const SymmetryTrace& tr) {
  std::ostringstream s;
  s << "T  " << tr.input.parens() << "  (" << phi_inv(tr.input).str() << ")\n"
    << "M  " << tr.marked.str() << "\n"
    << "N  ";
  for (int l : tr.necklace) s << l << ' ';
  s << "\nS  ";
  for (int p : tr.positions) s << p << ' ';
  s << "\nP  " << tr.path.str() << "\nP' " << tr.swapped.str() << "\nN' ";
  for (int l : tr.new_necklace) s << l << ' ';
  s << "\nM' " << tr.new_marked.str() << "\nT' " << tr.output.parens() << "  (" << phi_inv(tr.output).str()
    << ")\n";
  return s.str();
}

// Center for the gamma expansion: lowest plus highest nonzero degree.
long natural_center(const ExactPoly& p) {
  long low = 0;
  while (p.coeff(low) == 0) ++low;
  return low + p.degree();
}

json polys_report(long n, long k) {
  const ExactPoly w = w_poly(n, k);
  json j{{"n", n}, {"k", k}, {"W", poly_json(w)}};
  if (w.is_zero()) {
    j["real_rooted"] = true;
    j["gamma"] = nullptr;
  } else {
    j["real_rooted"] = is_real_rooted(w);
    const long center = natural_center(w);
    if (w.symmetric_about(center)) {
      const GammaExpansion g = gamma_expansion(w, center);
      json gs = json::array();
      for (const auto& x : g.gammas) gs.push_back(x.get_str());
      j["gamma"] = {{"center", center}, {"coefficients", gs}, {"positive", g.positive()}};
    } else {
      j["gamma"] = nullptr;
    }
  }
  if (k >= 1 && k <= n) {
    const Decomposition d = symmetric_decomposition(n, k);
    auto rr = [](const ExactPoly& p) { return p.is_zero() || is_real_rooted(p); };
    j["decomposition"] = {{"case", std::string(1, d.case_tag)},
                          {"plus", poly_json(d.plus)},
                          {"minus", poly_json(d.minus)},
                          {"plus_real_rooted", rr(d.plus)},
                          {"minus_real_rooted", rr(d.minus)}};
  } else {
    j["decomposition"] = nullptr;
  }
  return j;
}

// Concatenates sweeps of the same conjecture into one report.
ConjectureReport merge(std::vector<ConjectureReport> parts, json range) {
  ConjectureReport all = std::move(parts.front());
  all.range = std::move(range);
  for (std::size_t i = 1; i < parts.size(); ++i) {
    for (auto& v : parts[i].verdicts) all.verdicts.push_back(std::move(v));
    if (!all.counterexample && parts[i].counterexample) all.counterexample = parts[i].counterexample;
    all.wall_time_s += parts[i].wall_time_s;
  }
  return all;
}

bool is_usage_code(Errc c) {
  switch (c) {
    case Errc::empty_word:
    case Errc::not_dyck:
    case Errc::bad_counts:
    case Errc::bad_shape:
    case Errc::no_leaves:
    case Errc::bad_marking:
    case Errc::bad_profile:
    case Errc::invalid_argument:
    case Errc::parse_error:
      return true;
    default:
      return false;
  }
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err, std::istream& in) {
  CLI::App app{"Exact enumeration of Dyck paths by UD- and UUD-factors"};
  app.name("dyckfactors");
  app.require_subcommand(1);
  app.allow_extras(false);

  std::string out_path;
  std::string format;

  auto* table = app.add_subcommand("table", "Nonzero w(n,k,m) for n <= n-max as n,k,m,w rows");
  long table_n = 10;
  table->add_option("--n-max", table_n, "Largest semilength")->check(CLI::NonNegativeNumber);
  table->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  table->add_option("--out", out_path, "Write to this file instead of stdout");

  auto* count = app.add_subcommand("count", "One w-number by closed formula, optionally by enumeration");
  long count_n = 0, count_k = 0, count_m = 0;
  std::vector<long> count_ks;
  bool count_oracle = false;
  count->add_option("--n", count_n, "Semilength")->required()->check(CLI::NonNegativeNumber);
  auto* k_opt = count->add_option("--k", count_k, "Number of UD-factors");
  count->add_option("--m", count_m, "Number of UUD-factors")->needs(k_opt);
  count->add_option("--ks", count_ks, "Counts of UD, UUD, UUUD, ... factors")->delimiter(',')->excludes(k_opt);
  count->add_flag("--oracle", count_oracle, "Also count by exhaustive enumeration (n <= 16)");
  count->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));

  auto* series = app.add_subcommand("series", "Coefficients of the solved functional equation as CSV");
  int series_order = 10;
  series->add_option("--order", series_order, "Truncation order in x")->check(CLI::NonNegativeNumber);
  series->add_option("--out", out_path, "Write to this file instead of stdout");

  auto* bij = app.add_subcommand("bijection", "Trace of the m <-> k+1-m tree bijection");
  std::string bij_input;
  long bij_k = -1;
  bij->add_option("input", bij_input, "Dyck word or parenthesised tree (read from stdin when absent)");
  bij->add_option("--k", bij_k, "Expected number of leaves");
  bij->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
  bij->add_option("--out", out_path, "Write to this file instead of stdout");

  auto* ver = app.add_subcommand("verify", "Run an invariant suite; exit 1 on any failure");
  std::string suite = "all";
  long ver_n = 8;
  std::uint64_t seed = default_seed;
  ver->add_option("suite,--suite", suite, "oracle, bijections, identities, series, polys or all");
  ver->add_option("--n-max", ver_n, "Scale of the suite")->check(CLI::PositiveNumber);
  ver->add_option("--seed", seed, "Seed for randomized checks");
  ver->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
  ver->add_option("--out", out_path, "Write to this file instead of stdout");

  auto* polys = app.add_subcommand("polys", "W(n,k) coefficients, real-rootedness, gamma vector, decomposition");
  long poly_n = 0, poly_k = 0;
  polys->add_option("--n", poly_n, "Semilength")->required()->check(CLI::NonNegativeNumber);
  polys->add_option("--k", poly_k, "Number of UD-factors")->required()->check(CLI::NonNegativeNumber);
  polys->add_option("--out", out_path, "Write to this file instead of stdout");

  auto* conj = app.add_subcommand("conjectures", "Finite sweeps of the open conjectures");
  int conj_id = 0;
  long conj_max = -1, conj_k = -1;
  conj->add_option("--id", conj_id, "1 Sturm sequence, 2 Sturm unimodality, 3 real-rooted parts, 4 closed forms")
      ->required()
      ->check(CLI::Range(1, 4));
  conj->add_option("--max", conj_max, "Upper end of the sweep (n, or k for id 4)");
  conj->add_option("--k", conj_k, "Single k for id 1 (default: every k up to 6)");
  conj->add_option("--out", out_path, "Write to this file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return exit_usage;
  }

  try {
    if (*table) {
      emit(format == "json" ? table_json(table_n) : table_csv(table_n), out_path, out);
      return exit_ok;
    }

    if (*count) {
      if (count_oracle && count_n > 16) throw UsageError("--oracle is limited to n <= 16");
      json j{{"n", count_n}};
      BigCount formula;
      BigCount oracle;
      if (!count_ks.empty()) {
        j["ks"] = count_ks;
        formula = w_formula_multi(count_n, count_ks);
        if (count_oracle) {
          std::vector<std::size_t> ks;
          for (long v : count_ks) {
            if (v < 0) throw UsageError("factor counts must be nonnegative");
            ks.push_back(static_cast<std::size_t>(v));
          }
          oracle = w_oracle_multi(static_cast<std::size_t>(count_n), ks);
        }
      } else {
        if (!*k_opt) throw UsageError("count needs --k or --ks");
        j["k"] = count_k;
        j["m"] = count_m;
        formula = w_formula(count_n, count_k, count_m);
        if (count_oracle) {
          if (count_k < 0 || count_m < 0) throw UsageError("factor counts must be nonnegative");
          oracle = w_oracle(static_cast<std::size_t>(count_n), static_cast<std::size_t>(count_k),
                            static_cast<std::size_t>(count_m));
        }
      }
      j["formula"] = formula.get_str();
      if (count_oracle) j["oracle"] = oracle.get_str();
      if (format == "json")
        out << j.dump(2) << '\n';
      else
        out << formula.get_str() << (count_oracle ? " (enumeration: " + oracle.get_str() + ")" : "") << '\n';
      return count_oracle && formula != oracle ? exit_failure : exit_ok;
    }

    if (*series) {
      emit(solve_functional_equation(series_order).csv(), out_path, out);
      return exit_ok;
    }

    if (*bij) {
      std::string text = bij_input;
      if (text.empty()) text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
      const PlaneTree tree = PlaneTree::parse(text);
      const LeafStats ls = leaf_stats(tree);
      if (bij_k >= 0 && static_cast<long>(ls.leaves) != bij_k)
        throw UsageError("tree has " + std::to_string(ls.leaves) + " leaves, expected --k " + std::to_string(bij_k));
      const SymmetryTrace tr = symmetry_trace(tree);
      emit(format == "text" ? trace_text(tr) : trace_json(tr).dump(2) + "\n", out_path, out);
      return exit_ok;
    }

    if (*ver) {
      const SuiteReport rep = run_suite(suite, ver_n, seed);
      if (format == "text") {
        std::ostringstream s;
        for (const auto& c : rep.checks)
          s << (c.ok() ? "PASS " : "FAIL ") << c.name << " (" << c.passed << " passed, " << c.failed << " failed)\n";
        s << (rep.all_pass() ? "all checks passed" : "some checks failed") << '\n';
        emit(s.str(), out_path, out);
      } else {
        emit(rep.to_json().dump(2) + "\n", out_path, out);
      }
      return rep.all_pass() ? exit_ok : exit_failure;
    }

    if (*polys) {
      emit(polys_report(poly_n, poly_k).dump(2) + "\n", out_path, out);
      return exit_ok;
    }

    if (*conj) {
      ConjectureReport rep;
      switch (conj_id) {
        case 1: {
          const long n_max = conj_max < 0 ? 15 : conj_max;
          if (conj_k >= 0) {
            rep = check_sturm_sequence(conj_k, n_max);
          } else {
            std::vector<ConjectureReport> parts;
            for (long k = 1; k <= std::min(6L, n_max); ++k) parts.push_back(check_sturm_sequence(k, n_max));
            if (parts.empty()) throw UsageError("--max must be at least 1");
            rep = merge(std::move(parts), {{"k_min", 1}, {"k_max", std::min(6L, n_max)}, {"n_max", n_max}});
          }
          break;
        }
        case 2: {
          const long n_max = conj_max < 0 ? 15 : conj_max;
          if (n_max < 1) throw UsageError("--max must be at least 1");
          std::vector<ConjectureReport> parts;
          for (long n = 1; n <= n_max; ++n) parts.push_back(check_sturm_unimodal(n));
          rep = merge(std::move(parts), {{"n_min", 1}, {"n_max", n_max}});
          break;
        }
        case 3:
          rep = check_realroot_characterization(conj_max < 0 ? 30 : conj_max);
          break;
        default:
          rep = check_w2k_formulas(conj_max < 0 ? 12 : conj_max);
          break;
      }
      emit(rep.to_json().dump(2) + "\n", out_path, out);
      return rep.all_pass() ? exit_ok : exit_failure;
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return exit_usage;
  } catch (const Error& e) {
    err << (is_usage_code(e.code()) ? "usage error: " : "error: ") << e.what() << '\n';
    return is_usage_code(e.code()) ? exit_usage : exit_failure;
  }
  return exit_usage;
}

}  // namespace dyck
