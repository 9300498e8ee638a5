// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "test_support.hpp"

namespace pebble {
namespace {

struct cli_result {
  int code;
  std::string out;
  std::string err;
  json report() const { return json::parse(out); }
};

cli_result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run_cli(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("pebblegeom_test_" + name)).string();
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

TEST(Cli, CheckSmallPath) {
  const auto r = run({"check", "--params", "2,2,3,3", testing::data_path("small-path.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = r.report();
  EXPECT_EQ(j["status"], "sparse");
  EXPECT_EQ(j["remaining_pebbles"], 4);
  EXPECT_TRUE(j["witness"].is_null());
  EXPECT_TRUE(j["accepted"].is_null());
}

TEST(Cli, PresetRods) {
  const auto r = run({"check", "--preset", "rods", testing::data_path("braced-square-ac.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.report()["status"], "tight");
  EXPECT_EQ(r.report()["remaining_pebbles"], 3);
}

TEST(Cli, NotSparseWitness) {
  const auto r = run({"check", "--preset", "rods", testing::data_path("k4.json")});
  ASSERT_EQ(r.code, 0);
  const auto j = r.report();
  EXPECT_EQ(j["status"], "not-sparse");
  EXPECT_EQ(j["witness"]["deficit"], 1);
}

TEST(Cli, BadParams) {
  EXPECT_EQ(run({"check", "--params", "1,1,1,2", testing::data_path("small-path.json")}).code, 2);
  EXPECT_EQ(run({"check", "--params", "0,1,1,0", testing::data_path("small-path.json")}).code, 2);
  EXPECT_EQ(run({"check", "--params", "1,1,x,0", testing::data_path("small-path.json")}).code, 2);
  EXPECT_EQ(run({"check", "--preset", "nope", testing::data_path("small-path.json")}).code, 2);
  EXPECT_EQ(run({"check", testing::data_path("small-path.json")}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
}

TEST(Cli, IoErrors) {
  EXPECT_EQ(run({"check", "--preset", "rods", "/nonexistent/geometry.json"}).code, 3);
  const auto bad = temp_path("bad.json");
  std::ofstream(bad) << "{\"points\": [\"a\"], \"lines\": [\"x\"], \"incidences\": [[\"a\", \"y\"]]}";
  EXPECT_EQ(run({"check", "--preset", "rods", bad}).code, 3);
  std::ofstream(bad) << "{ not json";
  EXPECT_EQ(run({"check", "--preset", "rods", bad}).code, 3);
  std::filesystem::remove(bad);
}

TEST(Cli, ExtractWritesSubgeometry) {
  const auto in = temp_path("complete.json");
  const auto outp = temp_path("extracted.json");
  std::ofstream(in) << geometry_to_json(testing::complete(3, 2)).dump();
  const auto r = run({"extract", "--params", "1,1,2,2", "--out", outp, in});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.report()["accepted"].size(), 5u);
  const auto sub = load_geometry(slurp(outp));
  EXPECT_EQ(sub.incidence_count(), 5u);
  EXPECT_EQ(run({"check", "--params", "1,1,2,2", outp}).report()["status"], "tight");
  std::filesystem::remove(in);
  std::filesystem::remove(outp);
}

TEST(Cli, ExtractKeepsSparseInput) {
  const auto outp = temp_path("same.json");
  const auto r = run({"extract", "--params", "1,1,1,1", "--out", outp, testing::data_path("small-path.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto orig = testing::load_data("small-path.json");
  // Sparse under (1,1,1,1): 3 <= 2 + 2 - 1.
  EXPECT_EQ(load_geometry(slurp(outp)).incidences(), orig.incidences());
  std::filesystem::remove(outp);
}

TEST(Cli, ExtractRejectsLambda) {
  EXPECT_EQ(run({"extract", "--preset", "rods", testing::data_path("k4.json")}).code, 2);
}

TEST(Cli, Convert) {
  const auto r = run({"convert", "--k", "2", "--l", "3", testing::data_path("triangle.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = r.report();
  EXPECT_EQ(j["params"], (json{{"lambda", 2}, {"k1", 2}, {"k2", 3}, {"l", 3}}));
  EXPECT_EQ(j["geometry"]["incidences"].size(), 6u);
  EXPECT_EQ(run({"convert", "--k", "1", "--l", "1", testing::data_path("small-path.json")}).code, 3);
}

TEST(Cli, GenerateTight) {
  const auto r = run({"generate", "tight", "--params", "1,1,1,1", "--points", "3", "--lines", "3"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto g = load_geometry(r.out);
  EXPECT_EQ(run_recognition(g, {1, 1, 1, 1}).status, sparsity_status::tight);
  EXPECT_EQ(run({"generate", "tight", "--params", "1,2,2,3", "--points", "2", "--lines", "2"}).code, 4);
}

TEST(Cli, GenerateRandomIsDeterministic) {
  const std::vector<std::string> args{"generate", "random", "--points", "5", "--lines", "4",
                                      "--density", "0.4", "--seed", "7"};
  const auto a = run(args), b = run(args);
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, CheckIsByteDeterministic) {
  const std::vector<std::string> args{"check", "--preset", "rods", testing::data_path("k4.json")};
  EXPECT_EQ(run(args).out, run(args).out);
}

TEST(Cli, OracleAgreesWithCheck) {
  for (const char* f : {"small-path.json", "braced-square-ac.json", "k4.json"}) {
    const auto c = run({"check", "--preset", "rods", testing::data_path(f)});
    const auto o = run({"oracle", "--preset", "rods", "--max-subset", "--blocks", testing::data_path(f)});
    ASSERT_EQ(o.code, 0) << o.err;
    EXPECT_EQ(c.report()["status"], o.report()["status"]) << f;
    if (c.report()["status"] != "not-sparse") {
      EXPECT_EQ(c.report()["remaining_pebbles"], o.report()["remaining_pebbles"]) << f;
    }
  }
  EXPECT_EQ(run({"oracle", "--preset", "rods", "--oracle-bound", "3", testing::data_path("k4.json")}).code, 4);
}

TEST(Cli, VerifyMatroid) {
  const auto pair = run({"verify-matroid", "--preset", "rods", "--pair", testing::data_path("braced-square-ac.json"),
                         testing::data_path("braced-square-bd.json")});
  ASSERT_EQ(pair.code, 0) << pair.err;
  EXPECT_GE(pair.report()["exchange_violation_count"], 1);
  EXPECT_EQ(pair.report()["exchange_violations"][0]["element"][1], "e5");

  const auto full = run({"verify-matroid", "--params", "1,1,2,2", "--points", "2", "--lines", "3"});
  ASSERT_EQ(full.code, 0) << full.err;
  EXPECT_EQ(full.report()["exchange_violation_count"], 0);
  EXPECT_GT(full.report()["bases_count"], 0);
  EXPECT_EQ(run({"verify-matroid", "--params", "1,1,2,2"}).code, 2);
}

TEST(Cli, Help) {
  const auto r = run({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("check"), std::string::npos);
}

}  // namespace
}  // namespace pebble
