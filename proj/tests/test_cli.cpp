#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#if defined(_WIN32)
#error "the CLI harness assumes a POSIX shell"
#endif
#include <sys/wait.h>

namespace {

std::string cli_path() {
#ifdef VFWALK_CLI_PATH
  return VFWALK_CLI_PATH;
#else
  const char* p = std::getenv("VFWALK_CLI_PATH");
  REQUIRE_MESSAGE(p != nullptr, "VFWALK_CLI_PATH must point at the binary");
  return p;
#endif
}

int run(const std::string& args) {
  std::string cmd = "'" + cli_path() + "' " + args + " >/dev/null 2>&1";
  int status = std::system(cmd.c_str());
  REQUIRE(status != -1);
  if (WIFEXITED(status)) return WEXITSTATUS(status);
  return -2;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE_MESSAGE(in.good(), path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string line;
  while (std::getline(ss, line))
    if (!line.empty()) out.push_back(line);
  return out;
}

}  // namespace

TEST_CASE("usage errors exit with 2 and help with 0") {
  CHECK(run("--help") == 0);
  CHECK(run("") == 2);                     // a subcommand is required
  CHECK(run("check --no-such-flag") == 2);
  CHECK(run("frobnicate") == 2);
  CHECK(run("check --family torus-embedded --N 2") == 2);  // non-simple torus
  CHECK(run("check --family cycle --n 2") == 2);
  CHECK(run("check --family torus-embedded --N 3 --claims nope") == 2);
  CHECK(run("zeta --model walk --d 2 --N 3 --coin grover --u bogus") == 2);
}

TEST_CASE("default claim run on the embedded torus") {
  const std::string out = "cli_check_te3.json";
  CHECK(run("check --family torus-embedded --N 3 --grid 32 --out " + out) == 0);
  nlohmann::json doc = nlohmann::json::parse(slurp(out));
  REQUIRE(doc.contains("reports"));
  CHECK(doc["reports"].size() == 9);
  CHECK(doc["all_hard_pass"].get<bool>());
  std::vector<std::string> ids;
  for (const auto& r : doc["reports"]) {
    ids.push_back(r["claim"].get<std::string>());
    CHECK(r.contains("samples"));
    CHECK(r.contains("verdict"));
    CHECK(r.contains("params"));
    std::string v = r["verdict"].get<std::string>();
    CHECK((v == "pass" || v == "reported"));
  }
  std::vector<std::string> expect = {"2.1-series", "2.3", "4.1", "4.3", "5.1",
                                     "5.2", "5.3", "5.4-finite", "ren"};
  CHECK(ids == expect);
  std::remove(out.c_str());
}

TEST_CASE("claim subsets and aliases") {
  const std::string out = "cli_check_c5.json";
  CHECK(run("check --family cycle --n 5 --claims 2.1,ren --out " + out) == 0);
  nlohmann::json doc = nlohmann::json::parse(slurp(out));
  REQUIRE(doc["reports"].size() == 2);
  CHECK(doc["reports"][0]["claim"] == "2.1-series");
  CHECK(doc["reports"][1]["claim"] == "ren");
  for (const auto& r : doc["reports"]) CHECK(r["verdict"] == "pass");
  std::remove(out.c_str());
}

TEST_CASE("check output is byte stable") {
  CHECK(run("check --family complete --n 4 --claims 2.3,ren --out cli_a.json") ==
        0);
  CHECK(run("check --family complete --n 4 --claims 2.3,ren --out cli_b.json") ==
        0);
  CHECK(slurp("cli_a.json") == slurp("cli_b.json"));
  std::remove("cli_a.json");
  std::remove("cli_b.json");
}

TEST_CASE("zeta routes agree and report residuals") {
  const std::string out = "cli_zeta_k4.json";
  CHECK(run("zeta --model grover --family complete --n 4 --u 0.3 --out " + out) ==
        0);
  nlohmann::json doc = nlohmann::json::parse(slurp(out));
  REQUIRE(doc["rows"].size() == 1);
  const auto& row = doc["rows"][0];
  CHECK(row["residuals"]["determinant-vs-closed-form"].get<double>() < 1e-10);
  std::remove(out.c_str());
}

TEST_CASE("walk zeta at u = 0 is exactly one on every route") {
  const std::string out = "cli_zeta_walk0.json";
  CHECK(run("zeta --model walk --d 2 --N 3 --coin grover --u 0 --out " + out) ==
        0);
  nlohmann::json doc = nlohmann::json::parse(slurp(out));
  REQUIRE(doc["rows"].size() == 1);
  const auto& routes = doc["rows"][0]["routes"];
  for (const char* route : {"determinant", "fourier-product", "limit-integral"}) {
    double re = routes[route]["value_per_site"][0].get<double>();
    double im = routes[route]["value_per_site"][1].get<double>();
    CHECK(re == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(im == doctest::Approx(0.0).epsilon(1e-12));
  }
  std::remove(out.c_str());
}

TEST_CASE("singular coin fails with the numeric exit code") {
  std::ofstream coin("cli_bad_coin.json");
  coin << "[[2,0],[0,2]]\n";
  coin.close();
  CHECK(run("zeta --model walk --d 1 --N 3 --coin cli_bad_coin.json --u 0.5") ==
        3);
  std::remove("cli_bad_coin.json");
}

TEST_CASE("vertex-face spectra of the side-three torus stay on the circle") {
  const std::string out = "cli_spectra_te3.csv";
  CHECK(run("spectra --family torus-embedded --N 3 --out " + out) == 0);
  std::vector<std::string> rows = lines_of(slurp(out));
  REQUIRE(rows.size() == 37);  // header + 36 eigenvalues
  CHECK(rows[0] == "re,im,multiplicity");
  for (size_t i = 1; i < rows.size(); ++i) {
    double re = 0, im = 0;
    int mult = 0;
    REQUIRE(std::sscanf(rows[i].c_str(), "%lf,%lf,%d", &re, &im, &mult) == 3);
    CHECK(std::abs(std::hypot(re, im) - 1.0) <= 1e-9);
    CHECK(mult == 1);
  }
  std::remove(out.c_str());
}

TEST_CASE("clustered predicted spectra") {
  const std::string out = "cli_spectra_pred.csv";
  CHECK(run("spectra --family torus-embedded --N 3 --model predicted --out " +
            out) == 0);
  std::vector<std::string> rows = lines_of(slurp(out));
  CHECK(rows.size() > 1);
  CHECK(rows[0] == "re,im,multiplicity");
  std::remove(out.c_str());
}

TEST_CASE("limit traces shrink their gaps") {
  const std::string out = "cli_limit.csv";
  CHECK(run("limit --kind grover --d 1 --u 0.2 --grid 64 --out " + out) == 0);
  std::vector<std::string> rows = lines_of(slurp(out));
  REQUIRE(rows.size() == 5);  // header + grids 8, 16, 32, 64
  CHECK(rows[0] == "u,grid,value_re,value_im,gap");
  double prev_gap = 0;
  for (size_t i = 2; i < rows.size(); ++i) {  // gaps start on the second grid
    double u, re, im, gap;
    int grid;
    REQUIRE(std::sscanf(rows[i].c_str(), "%lf,%d,%lf,%lf,%lf", &u, &grid, &re,
                        &im, &gap) == 5);
    if (i > 2) CHECK(gap <= prev_gap + 1e-15);
    prev_gap = gap;
  }
  std::remove(out.c_str());
}

TEST_CASE("branch crossing exits with the numeric code") {
  CHECK(run("limit --kind ihara --d 2 --u 0.9 --grid 16") == 3);
}

TEST_CASE("build exports the matrix family") {
  CHECK(run("build --family torus-embedded --N 3 --out cli_te3") == 0);
  for (const char* suffix :
       {"-graph.json", "-adjacency.csv", "-grover.csv", "-faces.json",
        "-vertex-face.csv", "-overlap.csv", "-overlap-direct.csv"}) {
    std::string path = std::string("cli_te3") + suffix;
    CHECK(!slurp(path).empty());
    std::remove(path.c_str());
  }
}

TEST_CASE("walk-only source selects the coined-walk claim") {
  const std::string out = "cli_check_walk.json";
  CHECK(run("check --coin grover --d 1 --N 4 --out " + out) == 0);
  nlohmann::json doc = nlohmann::json::parse(slurp(out));
  REQUIRE(doc["reports"].size() == 1);
  CHECK(doc["reports"][0]["claim"] == "3.1");
  CHECK(doc["reports"][0]["verdict"] == "pass");
  std::remove(out.c_str());
}
