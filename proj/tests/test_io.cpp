#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include "cantor/cli.hpp"
#include "cantor/json_io.hpp"
#include "oracle.hpp"

using namespace cantor;

namespace {

int cli(std::vector<std::string> args) {
  args.insert(args.begin(), "cantor");
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  return run_cli(static_cast<int>(argv.size()), argv.data());
}

}  // namespace

TEST_CASE("JSON forms") {
  CHECK(to_json(DyadicSet::of({"01", "10"})).dump() == R"(["01","10"])");
  CHECK(to_json(DyadicRational(3, 2)).dump() == R"({"exp":2,"num":3})");
  Json g = Json::parse(R"([[["0","1"]],[["10","11"],["11","10"]]])");
  Graphing gr = graphing_from_json(g);
  REQUIRE(gr.members.size() == 2);
  CHECK(gr.cost() == DyadicRational::one());
  CHECK(to_json(gr) == g);
  CHECK(oracle::thrown([] { graphing_from_json(Json::object()); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("FNV-1a digests") {
  CHECK(digest(std::string()) == "cbf29ce484222325");
  CHECK(digest(std::string("a")) == "af63dc4c8601ec8c");
  CHECK(digest(to_json(DyadicSet::of({"0"}))) == digest(std::string(R"(["0"])")));
}

TEST_CASE("command line exit codes") {
  CHECK(cli({"--no-such-flag"}) == 2);
  CHECK(cli({}) == 2);
  CHECK(cli({"assembly", "run", "--p", "5", "--q", "7"}) == 2);
  CHECK(cli({"density", "plan", "--epsilon", "1/3"}) == 2);
  CHECK(cli({"density", "kappa", "--n", "4"}) == 2);
  CHECK(cli({"density", "plan", "--epsilon", "1/2", "--factors", "2", "--level", "14"}) == 0);
  CHECK(cli({"commuting", "demo", "--bases", "2,3,5", "--level", "6", "--format", "csv"}) == 0);
  CHECK(cli({"density", "assemble"}) == 1);
}

TEST_CASE("reports and manifests are deterministic") {
  std::string path = "cantor_test_report.json";
  REQUIRE(cli({"--seed", "9", "--report", path, "commuting", "demo", "--level", "6"}) == 0);
  std::ifstream a(path);
  std::string first((std::istreambuf_iterator<char>(a)), std::istreambuf_iterator<char>());
  REQUIRE(cli({"commuting", "demo", "--level", "6", "--seed", "9", "--report", path}) == 0);
  std::ifstream b(path);
  std::string second((std::istreambuf_iterator<char>(b)), std::istreambuf_iterator<char>());
  CHECK(!first.empty());
  CHECK(first == second);
  std::ifstream m(path + ".manifest.json");
  Json manifest = Json::parse(m);
  CHECK(manifest["seed"] == 9);
  CHECK(manifest["digests"]["report"] == digest(first));
  std::remove(path.c_str());
  std::remove((path + ".manifest.json").c_str());
}
