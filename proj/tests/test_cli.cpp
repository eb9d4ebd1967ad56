#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli_app.hpp"
#include "json.hpp"
#include "rhombforge/render.hpp"

namespace fs = std::filesystem;

namespace {

int run(const std::vector<std::string>& args) {
  std::vector<const char*> argv = {"rhombforge"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return rhombforge::run_cli(static_cast<int>(argv.size()), argv.data());
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("rhombforge_test_" + std::to_string(::getpid()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

}  // namespace

TEST_CASE("validate command") {
  CHECK(run({"validate", "--edge", "penrose-a"}) == 0);
  CHECK(run({"validate", "--edge", "maloney11"}) == 0);
  CHECK(run({"validate", "--edge", "(1,1,-1)", "--n", "9"}) == 2);
  CHECK(run({"validate", "--edge", "(1/2,-1/2)", "--n", "5"}) == 0);
  CHECK(run({"validate", "--edge", "(0.5,-0.5)", "--n", "5"}) == 0);
  CHECK(run({"validate", "--edge", "nonesuch"}) == 2);
  CHECK(run({"validate", "--edge", R"({"n":4,"ks2":[0,2,-2]})"}) == 0);
}

TEST_CASE("matrix command writes verified output") {
  TempDir tmp;
  const auto out = tmp.path / "matrix.json";
  CHECK(run({"matrix", "--edge", "harriss", "--out", out.string()}) == 0);
  const auto j = nlohmann::json::parse(slurp(out));
  CHECK(j.at("S_equals_M2").get<bool>());
  const auto counts = j.at("tile_counts").get<std::vector<long long>>();
  REQUIRE(counts.size() >= 3);
  CHECK(counts[0] == 6);
  CHECK(counts[1] == 4);
  CHECK(counts[2] == 1);

  const auto out2 = tmp.path / "ab.json";
  CHECK(run({"matrix", "--edge", "ab", "--out", out2.string()}) == 0);
  const auto j2 = nlohmann::json::parse(slurp(out2));
  CHECK(j2.at("tile_counts").get<std::vector<long long>>() ==
        std::vector<long long>{3, 2, 1, 0, 0});

  // straight edge gives the identity substitution
  const auto out3 = tmp.path / "id.json";
  CHECK(run({"matrix", "--edge", "(0)", "--n", "6", "--out", out3.string()}) == 0);
  const auto j3 = nlohmann::json::parse(slurp(out3));
  const auto m = j3.at("M").get<std::vector<long long>>();
  CHECK(m.front() == 1);
  for (size_t i = 1; i < m.size(); ++i) CHECK(m[i] == 0);
}

TEST_CASE("pvscan emits the csv table") {
  TempDir tmp;
  const auto out = tmp.path / "scan.csv";
  CHECK(run({"pvscan", "--n-max", "9", "--out", out.string()}) == 0);
  const std::string csv = slurp(out);
  CHECK(csv.rfind("m0,m1,m2,n,", 0) == 0);
  CHECK(csv.find("1,1,0,9,") != std::string::npos);
}

TEST_CASE("build command produces json and svg with clean coverage") {
  TempDir tmp;
  const auto prefix = (tmp.path / "patch").string();
  CHECK(run({"build", "--edge", "penrose-a", "--n", "9", "--s", "4", "--generations", "3",
             "--variant", "b", "--out", prefix, "--probes", "200", "--assert-coverage"}) == 0);
  CHECK(fs::exists(prefix + ".json"));
  CHECK(fs::exists(prefix + ".svg"));
  const auto j = nlohmann::json::parse(slurp(prefix + ".json"));
  CHECK(j.at("tiles").size() == 64);
  CHECK(j.at("generation").get<int>() == 3);
}

TEST_CASE("build round trip re-renders byte-identically") {
  TempDir tmp;
  const auto p1 = (tmp.path / "one").string();
  const auto p2 = (tmp.path / "two").string();
  const std::vector<std::string> base = {"build",        "--edge", "lb",  "--s",
                                         "2",            "--generations", "2", "--variant",
                                         "c",            "--out"};
  std::vector<std::string> a = base;
  a.push_back(p1);
  std::vector<std::string> b = base;
  b.push_back(p2);
  CHECK(run(a) == 0);
  CHECK(run(b) == 0);
  CHECK(slurp(p1 + ".svg") == slurp(p2 + ".svg"));
  CHECK(slurp(p1 + ".json") == slurp(p2 + ".json"));

  // loading the patch back and re-rendering reproduces the bytes exactly
  const rhombforge::Patch reloaded = rhombforge::Patch::from_json(slurp(p1 + ".json"));
  CHECK(rhombforge::render_patch(reloaded) == slurp(p1 + ".svg"));
}

TEST_CASE("build zero-area start reports exact cancellation") {
  TempDir tmp;
  const auto prefix = (tmp.path / "zig").string();
  CHECK(run({"build", "--edge", "penrose-a", "--n", "9", "--s", "0", "--generations", "1",
             "--out", prefix}) == 0);
  const auto j = nlohmann::json::parse(slurp(prefix + ".json"));
  CHECK(j.at("tiles").size() == 4);
}

TEST_CASE("lb build under variant c stays positive") {
  TempDir tmp;
  const auto prefix = (tmp.path / "lb").string();
  CHECK(run({"build", "--edge", "lb", "--s", "2", "--generations", "3", "--variant", "c",
             "--annihilate", "--out", prefix}) == 0);
  const auto j = nlohmann::json::parse(slurp(prefix + ".json"));
  for (const auto& t : j.at("tiles")) CHECK(t.at("sign").get<int>() == 1);
}

TEST_CASE("koch command emits one svg per generation") {
  TempDir tmp;
  const auto prefix = (tmp.path / "koch").string();
  CHECK(run({"koch", "--n", "5", "--generations", "4", "--out", prefix}) == 0);
  for (int g = 1; g <= 4; ++g) CHECK(fs::exists(prefix + "_g" + std::to_string(g) + ".svg"));
  CHECK_FALSE(fs::exists(prefix + "_g5.svg"));
}

TEST_CASE("custom presets file") {
  TempDir tmp;
  const auto presets = tmp.path / "presets.json";
  std::ofstream(presets) << R"({"mine": {"n": 6, "ks2": [0, 2, -2]}})";
  CHECK(run({"validate", "--edge", "mine", "--presets", presets.string()}) == 0);
  CHECK(run({"validate", "--edge", "mine"}) == 2);
}

TEST_CASE("unknown subcommand fails to parse") {
  CHECK(run({"frobnicate"}) != 0);
}
