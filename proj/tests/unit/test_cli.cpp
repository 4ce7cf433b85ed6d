#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "dyck/cli.hpp"

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args, const std::string& stdin_text = "") {
  args.insert(args.begin(), "dyckfactors");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  std::istringstream in(stdin_text);
  const int code = dyck::run_cli(static_cast<int>(argv.size()), argv.data(), out, err, in);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("table") {
    const Run ten = run({"table", "--n-max", "10"});
    CHECK(ten.code == 0);
    CHECK(ten.out == slurp(std::string(GOLDEN_DIR) + "/table1.csv"));
    CHECK(run({"table", "--n-max", "0"}).out == "n,k,m,w\n0,0,0,1\n");
    CHECK(run({"table", "--n-max", "2"}).out == "n,k,m,w\n0,0,0,1\n1,1,0,1\n2,1,1,1\n2,2,0,1\n");
    const Run js = run({"table", "--n-max", "3", "--format", "json"});
    CHECK(js.code == 0);
    CHECK(nlohmann::json::parse(js.out).is_array());
  }

  TEST_CASE("usage errors") {
    CHECK(run({}).code == 2);
    CHECK(run({"table", "--bogus"}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"count"}).code == 2);
    CHECK(run({"table", "--n-max", "-1"}).code == 2);
    CHECK(run({"--help"}).code == 0);
    CHECK(run({"conjectures", "--id", "9"}).code == 2);
    CHECK(run({"verify", "nonsense"}).code == 2);
    CHECK(run({"bijection", "UUD"}).code == 2);
    CHECK(run({"bijection", "UUDD"}).code == 2);
    CHECK(run({"bijection", "UUUDDUDDUUUDDDUUDD", "--k", "3"}).code == 2);
  }

  TEST_CASE("count") {
    const Run r = run({"count", "--n", "8", "--k", "4", "--m", "3", "--oracle", "--format", "json"});
    CHECK(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["formula"] == "168");
    CHECK(j["oracle"] == "168");
    const Run multi = run({"count", "--n", "7", "--ks", "3,3,1", "--oracle"});
    CHECK(multi.code == 0);
    CHECK(multi.out == "21 (enumeration: 21)\n");
  }

  TEST_CASE("series") {
    const Run r = run({"series", "--order", "1"});
    CHECK(r.code == 0);
    CHECK(r.out == "n,k,m,coefficient\n0,0,0,1\n1,1,0,1\n");
  }

  TEST_CASE("bijection") {
    const Run r = run({"bijection", "UUUDDUDDUUUDDDUUDD"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["output"]["word"] == "UUUUUDDDDDUDUDUUDD");
    CHECK(j["path"] == "UDUDUUDD");
    CHECK(j["swapped_path"] == "UUUDDDUD");
    CHECK(j["m_in"] == 3);
    CHECK(j["m_out"] == 2);
    const Run piped = run({"bijection"}, "((())())((()))(())\n");
    CHECK(piped.code == 0);
    CHECK(nlohmann::json::parse(piped.out) == j);
    CHECK(run({"bijection", "UUUDDUDDUUUDDDUUDD", "--format", "text"}).code == 0);
  }

  TEST_CASE("verify") {
    const Run r = run({"verify", "oracle", "--n-max", "5"});
    CHECK(r.code == 0);
    CHECK(nlohmann::json::parse(r.out)["all_pass"] == true);
    CHECK(run({"verify", "--suite", "series", "--n-max", "4", "--format", "text"}).code == 0);
  }

  TEST_CASE("polys") {
    const Run r = run({"polys", "--n", "5", "--k", "2"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["real_rooted"] == true);
    CHECK(j["gamma"]["center"] == 3);
    CHECK(j["gamma"]["coefficients"] == nlohmann::json::array({"0", "5"}));
    CHECK(j["decomposition"]["case"] == "c");
    CHECK(j["W"]["coefficients"] == nlohmann::json::array({"0", "5", "5"}));
  }

  TEST_CASE("conjectures") {
    const Run r = run({"conjectures", "--id", "4", "--max", "5"});
    CHECK(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    for (const char* key : {"id", "range", "verdicts", "counterexample"}) CHECK(j.contains(key));
    CHECK(run({"conjectures", "--id", "2", "--max", "6"}).code == 0);
  }

  TEST_CASE("output file") {
    const auto path = std::filesystem::temp_directory_path() / "dyck_cli_test_table.csv";
    std::filesystem::remove(path);
    const Run r = run({"table", "--n-max", "2", "--out", path.string()});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    CHECK(slurp(path.string()) == "n,k,m,w\n0,0,0,1\n1,1,0,1\n2,1,1,1\n2,2,0,1\n");
    std::filesystem::remove(path);
  }
}
