#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>

#include "boxspace/errors.hpp"
#include "boxspace/feasibility.hpp"
#include "boxspace/suites.hpp"

using namespace boxspace;

namespace {

int run(const std::string& args) {
  const std::string cmd = std::string(BOXSPACE_CLI) + " " + args + " >/dev/null 2>&1";
  const int rc = std::system(cmd.c_str());
  return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream is(p, std::ios::binary);
  std::stringstream ss;
  ss << is.rdbuf();
  return ss.str();
}

std::filesystem::path scratch(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / "boxspace_cli_test";
  std::filesystem::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST_CASE("feasibility arithmetic") {
  const auto a = feasibility::triangle_feasible(29, 1);
  CHECK(a.n_min == 8487408);
  CHECK(a.hypothesis_ok);
  CHECK(a.beyond_desk_scale);
  const auto b = feasibility::triangle_feasible(3, 1);
  CHECK(b.n_min == 1008);
  CHECK(b.order_exponent == 3 * 1008 + 3 + 3 + 2 * 81);
  for (unsigned k = 1; k <= 3; ++k) CHECK(feasibility::triangle_feasible(3, k).hypothesis_ok);
}

TEST_CASE("suite table") {
  CHECK(suites::suite_criteria("hensel") == std::vector<int>{2, 3});
  CHECK(suites::suite_criteria("ramanujan") == std::vector<int>{1});
  CHECK(suites::suite_criteria("all").size() == 10);
  CHECK_THROWS_AS(suites::suite_criteria("nonsense"), ParameterError);
}

TEST_CASE("criterion results are deterministic") {
  suites::Config cfg;
  const auto a = suites::run_criterion(5, cfg), b = suites::run_criterion(5, cfg);
  CHECK(a.pass);
  CHECK(a.detail.dump() == b.detail.dump());
}

TEST_CASE("command line: feasible") {
  const auto out = scratch("feasible.json");
  CHECK(run("feasible --q 29 --k 1 --out " + out.string()) == 0);
  const auto j = nlohmann::json::parse(slurp(out));
  CHECK(j["version"] == 1);
  CHECK(j["command"] == "feasible");
  CHECK(j["pass"] == true);
  CHECK(j["results"][0]["n_min"] == 8487408);
  CHECK(j["seed"] == 0);
}

TEST_CASE("command line: usage errors") {
  CHECK(run("pipeline nonsense") != 0);
  CHECK(run("") != 0);
  CHECK(run("spectrum --mode sideways --named petersen") != 0);
  CHECK(run("cover --m 2") != 0);
}

TEST_CASE("command line: pipeline reports are byte-identical") {
  const auto a = scratch("hensel_a.json"), b = scratch("hensel_b.json");
  CHECK(run("pipeline hensel --out " + a.string()) == 0);
  CHECK(run("pipeline hensel --out " + b.string()) == 0);
  CHECK(slurp(a) == slurp(b));
  CHECK(std::filesystem::exists(scratch("hensel_a.csv")));
  const auto j = nlohmann::json::parse(slurp(a));
  CHECK(j["results"].size() == 2);
  CHECK(j["pass"] == true);
}

TEST_CASE("command line: cover, spectrum and reps") {
  const auto c = scratch("k4cover.json");
  CHECK(run("cover --named complete:4 --m 2 --out " + c.string()) == 0);
  CHECK(nlohmann::json::parse(slurp(c))["results"][0]["cover_vertices"] == 32);
  CHECK(std::filesystem::exists(scratch("k4cover.cover")));
  const auto s = scratch("pet.json");
  CHECK(run("spectrum --named petersen --out " + s.string()) == 0);
  CHECK(slurp(scratch("pet.csv")).rfind("eigenvalue,multiplicity", 0) == 0);
  const auto r = scratch("reps.json");
  CHECK(run("reps --q 3 --k 1 --n 3 --out " + r.string()) == 0);
  CHECK(nlohmann::json::parse(slurp(r))["results"][0]["sum_dim_sq"] == 81);
  const auto e = scratch("edges.json");
  CHECK(run("cover --graph /nonexistent/file --m 2 --out " + e.string()) != 0);
}
