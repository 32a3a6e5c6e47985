#include "phylotrop/cli.hpp"
#include "phylotrop/report.hpp"

#include <catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace phylotrop;

namespace {

const std::string kData = PHYLOTROP_TEST_DATA;

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "phylotrop");
  std::ostringstream out, err;
  int code = cli::dispatch(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& contents) {
  auto path = std::filesystem::temp_directory_path() / ("phylotrop_test_" + name);
  std::ofstream(path) << contents;
  return path.string();
}

}  // namespace

TEST_CASE("verify FIG1", "[cli]") {
  auto r = run({"verify", kData + "/fig1.nwk", "--seed", "42"});
  REQUIRE(r.code == cli::kSuccess);
  auto j = Json::parse(r.out);
  CHECK(j["valuation"] == "-35");
  CHECK(j["D"] == "35");
  CHECK(j["d"] == "9");
  CHECK(j["verdict"] == true);
  CHECK(j["seed"] == 42);
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"n", "d", "D", "valuation", "verdict", "height_sum_ok", "claims", "seed", "resamples"});
}

TEST_CASE("verify text output ends with the verdict", "[cli]") {
  auto r = run({"verify", kData + "/bal4.nwk", "--format", "text"});
  REQUIRE(r.code == cli::kSuccess);
  CHECK(r.out.ends_with(" OK\n"));
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 1);
}

TEST_CASE("dissim CSV", "[cli]") {
  auto r = run({"dissim", kData + "/bal4.nwk", "-m", "2", "--format", "csv"});
  REQUIRE(r.code == cli::kSuccess);
  CHECK(r.out == "sigma,value\n1|2,2\n1|3,4\n1|4,4\n2|3,4\n2|4,4\n3|4,2\n");
}

TEST_CASE("plucker FIG1", "[cli]") {
  auto r = run({"plucker", kData + "/fig1.nwk", "-m", "3", "--sign", "negated"});
  REQUIRE(r.code == cli::kSuccess);
  auto j = Json::parse(r.out);
  CHECK(j["violations"].empty());

  auto g = run({"plucker", kData + "/bal4.nwk", "-m", "2", "--sign", "as-given"});
  CHECK(g.code == cli::kVerdictFailed);
  auto v = Json::parse(g.out)["violations"];
  REQUIRE(v.size() == 1);
  CHECK(v[0]["quad"] == Json::array({1, 2, 3, 4}));
  CHECK(v[0]["terms"] == Json::array({"4", "8", "8"}));
  CHECK(v[0]["argmin_count"] == 1);
}

TEST_CASE("validate", "[cli]") {
  auto r = run({"validate", kData + "/fig1.nwk"});
  CHECK(r.code == cli::kSuccess);
  auto bad = run({"validate", temp_file("ragged.nwk", "((1:2,2:1):1,(3:1,4:1):1);")});
  CHECK(bad.code == cli::kSuccess);  // still a phylogenetic tree
  auto j = Json::parse(bad.out);
  CHECK(j["ultrametric"] == false);
}

TEST_CASE("realize", "[cli]") {
  auto ok = run({"realize", temp_file("ok.json", R"({"n":3,"d":[["0","2","4"],["2","0","4"],["4","4","0"]]})")});
  REQUIRE(ok.code == cli::kSuccess);
  CHECK(Json::parse(ok.out)["newick"] == "((1:1,2:1):1,3:2);");

  auto bad = run({"realize", temp_file("bad.json", R"({"n":3,"d":[[0,1,4],[1,0,2],[4,2,0]]})")});
  CHECK(bad.code == cli::kVerdictFailed);

  auto malformed = run({"realize", temp_file("malformed.json", "{\"n\":")});
  CHECK(malformed.code == cli::kUsageError);
}

TEST_CASE("gen is deterministic and composes with verify", "[cli]") {
  auto a = run({"gen", "--leaves", "7", "--depth", "5/2", "--seed", "3", "--format", "text"});
  auto b = run({"gen", "--leaves", "7", "--depth", "5/2", "--seed", "3", "--format", "text"});
  REQUIRE(a.code == cli::kSuccess);
  CHECK(a.out == b.out);
  auto path = temp_file("gen.nwk", a.out);
  auto v = run({"verify", path, "--seed", "1"});
  CHECK(v.code == cli::kSuccess);
}

TEST_CASE("same arguments give byte-identical output", "[cli]") {
  for (auto args : std::vector<std::vector<std::string>>{{"verify", kData + "/fig1.nwk"},
                                                         {"dissim", kData + "/fig1.nwk", "-m", "4"},
                                                         {"plucker", kData + "/fig1.nwk", "-m", "2", "--format", "text"}})
    CHECK(run(args).out == run(args).out);
}

TEST_CASE("usage errors exit with 2", "[cli]") {
  CHECK(run({}).code == cli::kUsageError);
  CHECK(run({"frobnicate"}).code == cli::kUsageError);
  CHECK(run({"verify", kData + "/missing.nwk"}).code == cli::kUsageError);
  CHECK(run({"verify", kData + "/fig1.nwk", "--format", "xml"}).code == cli::kUsageError);
  CHECK(run({"verify", kData + "/fig1.nwk", "--format", "csv"}).code == cli::kUsageError);
  CHECK(run({"dissim", kData + "/bal4.nwk"}).code == cli::kUsageError);
  CHECK(run({"dissim", kData + "/bal4.nwk", "-m", "9"}).code == cli::kUsageError);
  CHECK(run({"plucker", kData + "/bal4.nwk", "-m", "2", "--sign", "sideways"}).code == cli::kUsageError);
  CHECK(run({"gen", "--leaves", "1"}).code == cli::kUsageError);
  CHECK(run({"gen", "--leaves", "5", "--depth", "zero"}).code == cli::kUsageError);
  CHECK(run({"verify", temp_file("broken.nwk", "(1:1,2:1")}).code == cli::kUsageError);
  auto small = run({"verify", temp_file("three.nwk", "((1:1,2:1):1,3:2);")});
  CHECK(small.code == cli::kUsageError);
  CHECK_FALSE(small.err.empty());
  CHECK(run({"--help"}).code == cli::kSuccess);
}
