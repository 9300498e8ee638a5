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

#include <random>

#include "test_support.hpp"

namespace pebble {
namespace {

using testing::load_data;

errc code_of(const std::string& doc) {
  try {
    load_geometry(doc);
  } catch (const error& e) {
    return e.code();
  }
  ADD_FAILURE() << "document loaded without error: " << doc;
  return errc::post_check_failed;
}

TEST(LoadGeometry, SmallPath) {
  const auto g = load_data("small-path.json");
  EXPECT_EQ(g.point_count(), 2u);
  EXPECT_EQ(g.line_count(), 2u);
  ASSERT_EQ(g.incidence_count(), 3u);
  EXPECT_EQ(g.incidences()[1], (incidence{0, 1}));
  EXPECT_EQ(g.point_name(1), "p2");
}

TEST(LoadGeometry, EmptyIncidenceList) {
  const auto g = load_geometry(R"({"points":["x"],"lines":["y"],"incidences":[]})");
  EXPECT_EQ(g.incidence_count(), 0u);
  EXPECT_EQ(g.point_count(), 1u);
}

TEST(LoadGeometry, PreservesFileOrder) {
  const auto g = load_geometry(
      R"({"points":["z","a"],"lines":["m","b"],"incidences":[["a","b"],["z","m"]]})");
  EXPECT_EQ(g.points(), (std::vector<std::string>{"z", "a"}));
  EXPECT_EQ(g.incidences()[0], (incidence{1, 1}));
}

TEST(LoadGeometry, Errors) {
  EXPECT_EQ(code_of(R"({"points":["p1"],"lines":["l1"],"incidences":[["p9","l1"]]})"),
            errc::dangling_reference);
  EXPECT_EQ(code_of(R"({"points":["p1"],"lines":["l1"],"incidences":[["p1","l7"]]})"),
            errc::dangling_reference);
  EXPECT_EQ(code_of(R"({"points":["p1"],"lines":["l1"],"incidences":[["p1","l1"],["p1","l1"]]})"),
            errc::duplicate_incidence);
  EXPECT_EQ(code_of(R"({"points":["x"],"lines":["x"],"incidences":[]})"), errc::duplicate_name);
  EXPECT_EQ(code_of(R"({"points":["x","x"],"lines":[],"incidences":[]})"), errc::duplicate_name);
  EXPECT_EQ(code_of(R"({"points":[""],"lines":[],"incidences":[]})"), errc::parse_error);
  EXPECT_EQ(code_of(R"({"points":["p1"],"lines":["l1"]})"), errc::parse_error);
  EXPECT_EQ(code_of(R"({"points":["p1"],"lines":["l1"],"incidences":[["p1"]]})"), errc::parse_error);
  EXPECT_EQ(code_of(R"({"points":[1],"lines":[],"incidences":[]})"), errc::parse_error);
  EXPECT_EQ(code_of("{not json"), errc::parse_error);
  EXPECT_EQ(code_of("[]"), errc::parse_error);
}

TEST(LoadGeometry, JsonRoundTrip) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto g = random_geometry(1 + seed % 4, 1 + seed % 3, 0.5, seed);
    const auto back = load_geometry(geometry_to_json(g).dump());
    EXPECT_EQ(back.points(), g.points());
    EXPECT_EQ(back.lines(), g.lines());
    EXPECT_EQ(back.incidences(), g.incidences());
  }
}

TEST(Support, InducedIncidences) {
  const auto g = load_data("small-path.json");
  const auto s = support::induced(g, {0}, {0, 1});
  EXPECT_EQ(s.incidences, (std::vector<std::size_t>{0, 1}));
  const auto t = support::induced(g, {1}, {1});
  EXPECT_TRUE(t.incidences.empty());
}

TEST(CountInequality, SmallPathFullSupport) {
  const auto g = load_data("small-path.json");
  EXPECT_EQ(count_inequality(support::full(g), {2, 2, 3, 3}), 1);  // 7 - 6
}

TEST(CountInequality, SingleIncidence) {
  const auto g = load_data("small-path.json");
  EXPECT_EQ(count_inequality(support::induced(g, {0}, {0}), {2, 2, 3, 3}), 0);
}

TEST(CountInequality, CompleteGraphOnFourVertices) {
  const auto g = load_data("k4.json");
  ASSERT_EQ(g.incidence_count(), 12u);
  // 2*4 + 3*6 - 3 = 23 against 2*12 = 24.
  EXPECT_EQ(count_inequality(support::full(g), {2, 2, 3, 3}), -1);
}

// Dropping incidences while keeping A and B fixed never lowers the slack.
TEST(CountInequality, MonotoneUnderIncidenceRemoval) {
  std::mt19937_64 rng(7);
  const sparsity_params p{2, 2, 3, 3};
  for (int trial = 0; trial < 200; ++trial) {
    const auto g = random_geometry(3, 3, 0.6, rng());
    auto s = support::full(g);
    auto previous = count_inequality(s, p);
    while (!s.incidences.empty()) {
      s.incidences.erase(s.incidences.begin() + static_cast<long>(rng() % s.incidences.size()));
      const auto now = count_inequality(s, p);
      EXPECT_GE(now, previous);
      previous = now;
    }
  }
}

}  // namespace
}  // namespace pebble
