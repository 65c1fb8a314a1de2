// Copyright 2026 The VertexLab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "vertexlab/cli.hpp"
#include "vertexlab/io.hpp"

namespace vertexlab {
namespace {

namespace fs = std::filesystem;

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("vertexlab_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) {
    const fs::path p = dir_ / name;
    std::ofstream(p) << text;
    return p.string();
  }
  static std::string slurp(const std::string& path) {
    std::ifstream in(path);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  }

  fs::path dir_;
};

constexpr const char* kSimplex2 = R"({"dim": 2, "wrap": -1, "lifts": [[1,0,0],[0,1,0],[0,0,1]]})";
constexpr const char* kSquare =
    R"({"dim": 2, "wrap": 1, "lifts": [["0","0","1"],["1","0","1"],["1","1","1"],["0","1","1"]]})";

TEST_F(CliTest, UsageErrorsExitTwo) {
  EXPECT_EQ(run({}).code, kExitUsage);
  EXPECT_EQ(run({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(run({"verify", "four", "--trials", "0"}).code, kExitUsage);
  EXPECT_EQ(run({"verify", "four", "--n-min", "3"}).code, kExitUsage);
  EXPECT_EQ(run({"verify", "moebius", "--trials", "3"}).code, kExitUsage);
  EXPECT_EQ(run({"verify", "seven"}).code, kExitUsage);
  EXPECT_EQ(run({"search", "four", "--trials", "3"}).code, kExitUsage);
  EXPECT_EQ(run({"analyze", (dir_ / "missing.json").string(), "--flattenings"}).code, kExitUsage);
  EXPECT_EQ(run({"schwarzian", "--eps", "1e-3,1e-2"}).code, kExitUsage);
  EXPECT_EQ(run({"schwarzian", "--function", "quartic"}).code, kExitUsage);
}

TEST_F(CliTest, VerifyEmitsAnEnvelope) {
  const CliRun r = run({"verify", "four", "--trials", "30", "--n-min", "5", "--n-max", "20",
                     "--seed", "42"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const ReportEnvelope env = envelope_from_json(Json::parse(r.out));
  EXPECT_EQ(env.tool, "vertexlab");
  EXPECT_EQ(env.command.front(), "verify");
  const CampaignReport rep = report_from_json(env.payload);
  EXPECT_EQ(rep.config.seed, 42u);
  EXPECT_EQ(rep.instances, 30u);
  EXPECT_TRUE(rep.violations.empty());
  EXPECT_NE(r.err.find("four"), std::string::npos);
}

TEST_F(CliTest, VerifyBarnerAndJobs) {
  const CliRun one = run({"verify", "barner", "--dim", "3", "--trials", "12", "--seed", "7"});
  ASSERT_EQ(one.code, kExitOk) << one.err;
  const CliRun three = run({"verify", "barner", "--dim", "3", "--trials", "12", "--seed", "7",
                         "--jobs", "3"});
  ASSERT_EQ(three.code, kExitOk);
  Json a = Json::parse(one.out)["payload"];
  Json b = Json::parse(three.out)["payload"];
  EXPECT_GE(a["min_count"].get<int>(), 4);
  for (Json* j : {&a, &b}) {
    j->erase("wall_time_ms");
    (*j)["config"].erase("jobs");
  }
  EXPECT_EQ(a, b);
}

TEST_F(CliTest, SeedFromEnvironment) {
  ::setenv("VERTEXLAB_SEED", "1234", 1);
  const CliRun r = run({"verify", "ghys", "--trials", "3"});
  ::unsetenv("VERTEXLAB_SEED");
  ASSERT_EQ(r.code, kExitOk);
  EXPECT_EQ(Json::parse(r.out)["payload"]["config"]["seed"].get<std::uint64_t>(), 1234u);
  const CliRun explicit_seed = run({"verify", "ghys", "--trials", "3", "--seed", "1234"});
  Json a = Json::parse(r.out)["payload"];
  Json b = Json::parse(explicit_seed.out)["payload"];
  a.erase("wall_time_ms");
  b.erase("wall_time_ms");
  EXPECT_EQ(a, b);
}

TEST_F(CliTest, AnalyzeSimplexAndSquare) {
  const CliRun s = run({"analyze", write("s2.json", kSimplex2), "--flattenings"});
  ASSERT_EQ(s.code, kExitOk) << s.err;
  EXPECT_EQ(Json::parse(s.out)["payload"]["flattenings"]["positions"], Json::parse("[0,1,2]"));
  const CliRun q = run({"analyze", write("sq.json", kSquare), "--extremal-triples",
                     "--multiplicity", "1,0,-1/2", "--strictly-convex"});
  ASSERT_EQ(q.code, kExitOk) << q.err;
  const Json p = Json::parse(q.out)["payload"];
  EXPECT_EQ(p["extremal_triples"]["count"], 4);
  EXPECT_EQ(p["multiplicity"]["multiplicity"], 2);
  EXPECT_EQ(p["strictly_convex"]["strictly_convex"], false);
}

TEST_F(CliTest, AnalyzePairTuples) {
  const std::string file = write(
      "t.json",
      R"({"kind": "pair_tuples", "x": [[0,1],[1,1],[2,1],[3,1]], "y": [["0","1"],["1","1"],["5/2","1"],["3","1"]]})");
  const CliRun r = run({"analyze", file, "--ghys"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(Json::parse(r.out)["payload"]["ghys"]["count"], 4);
  EXPECT_EQ(run({"analyze", file, "--extremal-triples"}).code, kExitUsage);
}

TEST_F(CliTest, MalformedRationalIsLinePrecise) {
  const std::string file = write("bad.json",
                                 "{\n  \"dim\": 2,\n  \"wrap\": 1,\n"
                                 "  \"lifts\": [[\"0\",\"0\",\"1\"], [\"1\",\"0\",\"1\"],\n"
                                 "            [\"1\",\"1/0\",\"1\"], [\"0\",\"1\",\"1\"]]\n}\n");
  const CliRun r = run({"analyze", file, "--flattenings"});
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_NE(r.err.find(file + ":5:"), std::string::npos) << r.err;
  EXPECT_TRUE(r.out.empty());
}

TEST_F(CliTest, SvgIsDeterministic) {
  const std::string oct = write(
      "oct.json", to_json(PlanarConvexPolygon::make({{0, 0}, {4, -1}, {8, 0}, {10, 3}, {9, 7},
                                                     {5, 9}, {1, 8}, {-1, 4}}))
                      .dump());
  const CliRun a = run({"svg", oct, "--extremal-triples"});
  const CliRun b = run({"svg", oct, "--extremal-triples"});
  ASSERT_EQ(a.code, kExitOk) << a.err;
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.out.rfind("<svg", 0), 0u);
  std::size_t circles = 0;
  for (std::size_t pos = a.out.find("fill=\"none\" stroke=\"#"); pos != std::string::npos;
       pos = a.out.find("fill=\"none\" stroke=\"#", pos + 1)) {
    ++circles;
  }
  EXPECT_GE(circles, 4u);
  const std::string path = (dir_ / "o.svg").string();
  ASSERT_EQ(run({"svg", oct, "--extremal-quintuples", "--out", path}).code, kExitOk);
  EXPECT_EQ(slurp(path), run({"svg", oct, "--extremal-quintuples"}).out);
  const std::string s3 = write(
      "s3.json", R"({"dim": 3, "wrap": 1, "lifts": [[1,0,0,0],[0,1,0,0],[0,0,1,0],[0,0,0,1]]})");
  EXPECT_EQ(run({"svg", s3}).code, kExitUsage);
}

TEST_F(CliTest, SvgQuadrilateralHighlightsFourTriples) {
  const CliRun r = run({"svg", write("sq.json", kSquare), "--extremal-triples"});
  ASSERT_EQ(r.code, kExitOk);
  std::size_t circles = 0;
  for (std::size_t pos = r.out.find("stroke-opacity"); pos != std::string::npos;
       pos = r.out.find("stroke-opacity", pos + 1)) {
    ++circles;
  }
  EXPECT_EQ(circles, 4u);
}

TEST_F(CliTest, SearchAndReverifyRoundTrip) {
  const std::string report = (dir_ / "m.json").string();
  const CliRun s = run({"search", "moebius", "--trials", "6", "--seed", "3", "--out", report});
  ASSERT_EQ(s.code, kExitOk) << s.err;
  EXPECT_TRUE(s.out.empty());
  EXPECT_NE(s.err.find("no counterexample found at scale 6"), std::string::npos);
  const CliRun ok = run({"reverify", report});
  ASSERT_EQ(ok.code, kExitOk) << ok.err;
  for (const auto& rec : Json::parse(ok.out)["payload"]["records"]) {
    EXPECT_TRUE(rec["matches_record"].get<bool>());
  }
  // Patch a serialized count below its bound.
  Json j = Json::parse(slurp(report));
  Json record = j["payload"]["extremes"][0];
  record["count"] = 1;
  const CliRun bad = run({"reverify", write("bad_record.json", record.dump())});
  EXPECT_EQ(bad.code, kExitViolation);
  EXPECT_FALSE(Json::parse(bad.out)["payload"]["records"][0]["matches_record"].get<bool>());
}

TEST_F(CliTest, SchwarzianTable) {
  const CliRun r = run({"schwarzian", "--eps", "1e-2,1e-3,1e-4"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const Json t = Json::parse(r.out)["payload"];
  ASSERT_EQ(t["rows"].size(), 3u);
  EXPECT_NEAR(t["rows"][1]["value"].get<double>(), -11.999628007211863, 1e-12);
  const CliRun p = run({"schwarzian", "--function", "projective"});
  ASSERT_EQ(p.code, kExitOk);
  for (const auto& row : Json::parse(p.out)["payload"]["rows"]) EXPECT_EQ(row["value"], 0.0);
}

}  // namespace
}  // namespace vertexlab
