#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "vpf/cli.hpp"
#include "vpf/reesdata.hpp"

using namespace vpf;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& body) {
  auto p = std::filesystem::temp_directory_path() / ("vpfbetti_test_" + name);
  std::ofstream(p) << body;
  return p.string();
}

}  // namespace

TEST_CASE("cli count") {
  CHECK(run({"count", "--degrees", "2,3,6,7", "--at", "9,2"}).out == "2\n");
  CHECK(run({"count", "--degrees", "2,3,6,7", "--at", "0,0"}).out == "1\n");
  CHECK(run({"count", "--degrees", "2,3,6,7", "--at", "1,0"}).out == "0\n");

  auto m = temp_file("matrix.json", "[[2,3,6,7],[1,1,1,1]]");
  CHECK(run({"count", "--matrix", m, "--at", "9,2"}).out == "2\n");
  auto m1 = temp_file("matrix1.json", "[[1,1,2]]");
  CHECK(run({"count", "--matrix", m1, "--at", "4"}).out == "9\n");
}

TEST_CASE("cli usage errors exit 2") {
  CHECK(run({"count", "--degrees", "one", "--at", "1,0"}).code == 2);
  CHECK(run({"count", "--degrees", "2,3", "--at", "1"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"reproduce", "4.8"}).code == 2);
  CHECK(run({"regions", "--degrees", "2,3,6", "--format", "png"}).code == 2);
  CHECK(run({"rees-ci", "--degrees", "1,2,3,4"}).code == 2);
  auto bad = temp_file("bad.json", R"({"generators": [[2,1]], "tor": [], "extra": 1})");
  Result r = run({"verify", "--spec", bad});
  CHECK(r.code == 2);
  CHECK(r.err.find("document.extra") != std::string::npos);
  CHECK(run({"count", "--help"}).code == 0);
}

TEST_CASE("cli regions") {
  Result r = run({"regions", "--degrees", "2,3,6", "--index", "2"});
  CHECK(r.code == 0);
  CHECK(r.out.find("L_0: mu = 2*t + 9\n  L_1: mu = 3*t + 8\n  L_2: mu = 6*t + 5\n") != std::string::npos);
  CHECK(r.out.find("R_1: 3*t + 8 <= mu <= 6*t + 5") != std::string::npos);
  CHECK(r.out.find("R_2") == std::string::npos);

  r = run({"regions", "--degrees", "2,3,6", "--index", "0"});
  CHECK(r.out.find("L_0: mu = 2*t\n  L_1: mu = 3*t\n  L_2: mu = 6*t\n") != std::string::npos);

  r = run({"regions", "--degrees", "1,2", "--index", "1"});
  CHECK(r.out.find("L_0: mu = t + 2\n  L_1: mu = 2*t + 1\n") != std::string::npos);
  CHECK(r.out.find("R_0: t + 2 <= mu <= 2*t + 1") != std::string::npos);

  r = run({"regions", "--degrees", "2,3,6", "--index", "7"});
  CHECK(r.code == 0);
  CHECK(r.out.find("empty decomposition") != std::string::npos);
}

TEST_CASE("cli regions structured output re-ingests") {
  Result r = run({"regions", "--degrees", "2,3,6", "--index", "1", "--format", "structured"});
  CHECK(r.code == 0);
  auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["regions"]["t0"] == 5);
  CHECK(doc["regions"]["modulus"] == "12");
  ToriSpec back = ingest(r.out);
  CHECK(back.kappa(1) == ci_shifts(std::vector<std::int64_t>{2, 3, 6}).kappa(1));
  CHECK(run({"regions", "--degrees", "2,3,6", "--index", "1", "--format", "structured"}).out == r.out);
}

TEST_CASE("cli regions csv and svg") {
  Result r = run({"regions", "--degrees", "2,3,6", "--index", "1", "--format", "csv", "--tmax", "10"});
  CHECK(r.out.rfind("mu,t,region,value\n", 0) == 0);
  CHECK(r.out.find("\n28,10,") != std::string::npos);
  CHECK(r.out.find("\n28,10,3,3\n") != std::string::npos);

  r = run({"regions", "--degrees", "2,3,6", "--index", "1", "--format", "svg"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("<svg", 0) == 0);
  CHECK(r.out.find("</svg>") != std::string::npos);
  // Integer coordinates only.
  CHECK(r.out.find("x1=\"") != std::string::npos);
  bool fractional = false;
  for (std::size_t p = r.out.find("=\""); p != std::string::npos; p = r.out.find("=\"", p + 1)) {
    std::size_t e = r.out.find('"', p + 2);
    std::string v = r.out.substr(p + 2, e - p - 2);
    if (!v.empty() && (std::isdigit(static_cast<unsigned char>(v[0])) || v[0] == '-') && v.find('.') != std::string::npos)
      fractional = true;
  }
  CHECK_FALSE(fractional);
}

TEST_CASE("cli hilbert, chambers, rees-ci") {
  CHECK(run({"hilbert", "--degrees", "2,3,6", "--at", "12,2"}).out == "1\n");
  auto spec = temp_file("ci236.json", run({"rees-ci", "--degrees", "2,3,6", "--format", "structured"}).out);
  CHECK(run({"hilbert", "--spec", spec, "--index", "1", "--at", "28,10"}).out == "3\n");
  Result grid = run({"hilbert", "--degrees", "2,3", "--tmax", "2", "--format", "csv"});
  CHECK(grid.out == "mu,t,value\n0,0,1\n2,1,1\n3,1,1\n4,2,1\n5,2,1\n6,2,1\n");

  Result ch = run({"chambers", "--degrees", "2,3,6"});
  CHECK(ch.out.find("C1: mu - 2*t >= 0, -mu + 3*t >= 0") != std::string::npos);
  CHECK(ch.out.find("C2: mu - 3*t >= 0, -mu + 6*t >= 0") != std::string::npos);

  Result ci = run({"rees-ci", "--degrees", "2,3,6"});
  CHECK(ci.out.find("Tor_1: ") != std::string::npos);
  CHECK(ci.out.find("1*(8, 1)") != std::string::npos);
}

TEST_CASE("cli verify") {
  Result r = run({"verify", "--degrees", "2,3,6", "--tmax", "12"});
  CHECK(r.code == 0);
  CHECK(r.out.find("FAIL") == std::string::npos);
  CHECK(r.out.find("PASS oracle equivalence Tor_1") != std::string::npos);

  // Corrupt the (5, 1) coefficient.
  ToriSpec s = ci_shifts(std::vector<std::int64_t>{2, 3, 6});
  s.tor.at(1).add(make_point({5, 1}), -2);
  auto bad = temp_file("corrupt.json", serialize(s));
  r = run({"verify", "--spec", bad, "--tmax", "12"});
  CHECK(r.code == 1);
  CHECK(r.out.find("FAIL nonnegative Tor_1") != std::string::npos);
  CHECK(r.out.find("witness (") != std::string::npos);
  auto js = nlohmann::json::parse(run({"verify", "--spec", bad, "--tmax", "12", "--format", "structured"}).out);
  CHECK(js["passed"] == false);
  for (const auto& c : js["checks"])
    if (c["passed"] == false) CHECK(c.contains("witness"));

  r = run({"verify", "--degrees", "2,3,6", "--tmax", "0"});
  CHECK(r.code == 0);
  CHECK(r.out.find("warning: t-max 0") != std::string::npos);
}

TEST_CASE("cli structured output is byte-identical across runs") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"verify", "--degrees", "2,3,6", "--tmax", "8", "--format", "structured"},
           {"chambers", "--degrees", "1,2,5", "--format", "structured"},
           {"reproduce", "4.7", "--tmax", "10", "--format", "structured"}})
    CHECK(run(args).out == run(args).out);
}

TEST_CASE("cli reproduce") {
  Result r = run({"reproduce", "4.7", "--tmax", "20"});
  CHECK(r.code == 0);
  CHECK(r.out.find("HNF(A) = [[1, 0, 0], [0, 1, 0]]") != std::string::npos);
  CHECK(r.out.find("mu - 2*t >= 0, -mu + 3*t >= 0") != std::string::npos);
  CHECK(r.out.find("Q2 + Q2") != std::string::npos);
  std::size_t flags = 0;
  for (std::size_t p = r.out.find("flag: "); p != std::string::npos; p = r.out.find("flag: ", p + 1)) ++flags;
  CHECK(flags == 2);

  auto out = std::filesystem::temp_directory_path() / "vpfbetti_test_repro.txt";
  Result f = run({"reproduce", "4.7", "--tmax", "6", "--out", out.string()});
  CHECK(f.out.empty());
  CHECK(std::filesystem::file_size(out) > 0);
}
