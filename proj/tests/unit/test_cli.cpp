#include <gtest/gtest.h>

#include <fstream>
#include <set>
#include <sstream>

#include "claims.hpp"
#include "cli.hpp"
#include "json_io.hpp"

namespace {

using fatcat::io::json;

struct Outcome {
  int code;
  std::string out;
  std::string err;

  [[nodiscard]] json parsed() const { return json::parse(out); }
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = fatcat::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string fixture(const std::string& name) { return std::string(FATCAT_FIXTURES) + "/" + name; }

TEST(Cli, CellBijectionOnOrdinalFile) {
  auto r = run({"verify", "cell-bijection", "--category", fixture("ord1.json"), "--N", "2", "--D", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = r.parsed();
  EXPECT_EQ(j["result"], "pass");
  EXPECT_EQ(j["details"][0]["nondegenerate_counts"], json({6, 9, 4}));
  EXPECT_EQ(j["details"][0]["product_counts"], json({6, 9, 4}));
}

TEST(Cli, HomologyOfBZ2) {
  auto r = run({"homology", "--input", fixture("bz2.json"), "--fat", "--D", "5", "--k", "1"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.parsed(), json::parse(R"({"degree":1,"betti":0,"torsion":[2]})"));
}

TEST(Cli, HomologyAllDegreesAgreesAcrossChainModels) {
  auto fat = run({"homology", "--category", "cyclic:2", "--fat", "--D", "4"});
  auto geo = run({"homology", "--category", "cyclic:2", "--geometric", "--D", "4"});
  ASSERT_EQ(fat.code, 0);
  ASSERT_EQ(geo.code, 0);
  EXPECT_EQ(fat.parsed()["groups"], geo.parsed()["groups"]);
  EXPECT_EQ(geo.parsed()["groups"].size(), 4u);
}

TEST(Cli, HomologyOfComplexDocument) {
  const auto path = ::testing::TempDir() + "/circle_complex.json";
  std::ofstream(path) << R"({"D":1,"complete":true,"basis":[["a","b"],["x","y"]],"boundary":[[],[[0,0,-1],[1,0,1],[0,1,-1],[1,1,1]]]})";
  auto r = run({"homology", "--input", path, "--k", "1"});
  ASSERT_EQ(r.code, 0) << r.out;
  EXPECT_EQ(r.parsed()["betti"], 1);
}

TEST(Cli, UnreliableDegreeIsRejected) {
  auto r = run({"homology", "--category", "ord:1", "--D", "2", "--k", "2"});
  EXPECT_EQ(r.code, 2);
  EXPECT_TRUE(r.parsed().contains("error"));
}

TEST(Cli, RhoWitnessMeansSuccess) {
  for (const char* n : {"1", "2"}) {
    auto r = run({"counterexample", "rho", "--n", n});
    ASSERT_EQ(r.code, 0) << n;
    auto j = r.parsed();
    ASSERT_EQ(j["details"].size(), 2u);
    for (const auto& d : j["details"]) EXPECT_TRUE(d.contains("witness"));
  }
  EXPECT_EQ(run({"counterexample", "rho", "--n", "1", "--reading", "short"}).parsed()["details"].size(), 1u);
}

TEST(Cli, CocycleFixtures) {
  EXPECT_EQ(run({"verify", "cocycle", "--input", fixture("mobius.json")}).code, 0);
  auto broken = run({"verify", "cocycle", "--input", fixture("broken_flips.json")});
  EXPECT_EQ(broken.code, 1);
  auto j = broken.parsed();
  EXPECT_EQ(j["result"], "fail");
  ASSERT_FALSE(j["witnesses"].empty());
  EXPECT_EQ(j["witnesses"][0]["violation"]["law"], "cocycle-law");
}

TEST(Cli, BlowupAndUniversalCocycle) {
  EXPECT_EQ(run({"verify", "blowup", "--input", fixture("octahedron.json")}).code, 0);
  EXPECT_EQ(run({"verify", "blowup", "--input", fixture("circle_stars.json"), "--d", "1"}).code, 0);
  EXPECT_EQ(run({"verify", "universal-cocycle", "--category", "cyclic:2", "--N", "3", "--D", "3", "--input",
                 fixture("mobius.json")})
                .code,
            0);
  EXPECT_EQ(run({"verify", "universal-cocycle", "--category", fixture("pair2.json"), "--N", "2", "--D", "3"}).code, 0);
  EXPECT_EQ(run({"verify", "universal-cocycle", "--category", "cyclic:2", "--N", "3", "--D", "3", "--input",
                 fixture("broken_flips.json")})
                .code,
            1);
}

TEST(Cli, ComparisonSuites) {
  EXPECT_EQ(run({"verify", "tom-dieck", "--category", "cyclic:2", "--N", "4", "--D", "3"}).code, 0);
  EXPECT_EQ(run({"verify", "quillen-a", "--category", "ord:1", "--N", "3", "--D", "2"}).code, 0);
  EXPECT_EQ(run({"verify", "tau", "--category", "pair:2", "--N", "4", "--D", "3"}).code, 0);
}

TEST(Cli, Partition) {
  EXPECT_EQ(run({"verify", "partition"}).code, 0);
  EXPECT_EQ(run({"verify", "partition", "--t", "1/2,1/3,1/6", "--s", "3/4"}).code, 0);
  EXPECT_EQ(run({"verify", "partition", "--t", "1/2,1/3", "--s", "1/2"}).code, 2);
  EXPECT_EQ(run({"verify", "partition", "--t", "1/2,x"}).code, 2);
}

TEST(Cli, MalformedInputsExitTwo) {
  EXPECT_EQ(run({"nerve", "--category", fixture("malformed.json")}).code, 2);
  auto missing = run({"nerve", "--category", fixture("missing_field.json")});
  EXPECT_EQ(missing.code, 2);
  EXPECT_NE(missing.err.find("compose"), std::string::npos);
  EXPECT_EQ(run({"nerve", "--category", fixture("no_such_file.json")}).code, 2);
  EXPECT_EQ(run({"nerve", "--category", "ord:x"}).code, 2);
  EXPECT_EQ(run({"verify", "cocycle"}).code, 2);
  EXPECT_EQ(run({"verify", "frobnicate"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"counterexample", "rho", "--n", "1", "--reading", "sideways"}).code, 2);
}

TEST(Cli, BrokenLawsAreReportedWithWitness) {
  auto r = run({"nerve", "--category", fixture("broken_assoc.json"), "--D", "1"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("associativity"), std::string::npos);
}

TEST(Cli, CellCapIsEnforced) {
  auto r = run({"nerve", "--category", "ord:6", "--D", "30"});
  EXPECT_EQ(r.code, 2);
  EXPECT_EQ(r.parsed()["error"]["kind"], "resource-limit");
}

TEST(Cli, NerveRoundTrip) {
  auto r = run({"nerve", "--category", fixture("ord2.json"), "--D", "2"});
  ASSERT_EQ(r.code, 0);
  auto x = fatcat::io::simplicial_from_json(r.parsed());
  EXPECT_EQ(fatcat::io::to_json(x), r.parsed());
  EXPECT_EQ(x.cell_count(0), 3u);
}

TEST(Cli, FixturesRoundTrip) {
  using namespace fatcat::io;
  for (const char* name : {"ord1.json", "ord2.json"}) {
    auto doc = read_file(fixture(name));
    EXPECT_EQ(to_json(category_from_json(doc)), doc) << name;
  }
  for (const char* name : {"bz2.json", "pair2.json"}) {
    auto doc = read_file(fixture(name));
    EXPECT_EQ(to_json(groupoid_from_json(doc)), doc) << name;
  }
  for (const char* name : {"mobius.json", "broken_flips.json"}) {
    auto doc = read_file(fixture(name));
    EXPECT_EQ(to_json(cocycle_from_json(doc)), doc) << name;
  }
  for (const char* name : {"octahedron.json", "circle_stars.json"}) {
    auto doc = read_file(fixture(name));
    EXPECT_EQ(to_json(*covered_from_json(doc)), doc) << name;
  }
}

TEST(Cli, OutFileMatchesStdout) {
  const auto path = ::testing::TempDir() + "/nerve_out.json";
  auto direct = run({"nerve", "--category", "nat:2", "--D", "2"});
  auto written = run({"nerve", "--category", "nat:2", "--D", "2", "--out", path});
  ASSERT_EQ(written.code, 0);
  EXPECT_TRUE(written.out.empty());
  std::stringstream file;
  file << std::ifstream(path).rdbuf();
  EXPECT_EQ(file.str(), direct.out);
}

TEST(Cli, ReportIsDeterministic) {
  auto a = run({"report", "all"});
  auto b = run({"report", "all"});
  ASSERT_EQ(a.code, 0);
  auto ja = a.parsed(), jb = b.parsed();
  EXPECT_EQ(ja["claims"].dump(), jb["claims"].dump());
  EXPECT_EQ(ja["canonical_digest"], jb["canonical_digest"]);
  EXPECT_EQ(ja["canonical_digest"], fatcat::claims::fnv1a64_hex(ja["claims"].dump()));
  std::set<std::string> ids;
  for (const auto& c : ja["claims"]) EXPECT_TRUE(ids.insert(c["id"].get<std::string>()).second);
  EXPECT_EQ(ids.size(), ja["timing_ms"].size());
}

}  // namespace
