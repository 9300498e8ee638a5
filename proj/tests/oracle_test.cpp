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

const sparsity_params kRods{2, 2, 3, 3};

TEST(BruteForce, ReferenceGeometries) {
  EXPECT_EQ(brute_force_verdict(load_data("small-path.json"), kRods).status,
            sparsity_status::sparse_not_tight);
  EXPECT_EQ(brute_force_verdict(load_data("braced-square-bd.json"), kRods).status, sparsity_status::tight);
  const auto k4 = brute_force_verdict(load_data("k4.json"), kRods);
  ASSERT_EQ(k4.status, sparsity_status::not_sparse);
  EXPECT_EQ(k4.witness->where.points.size(), 4u);
  EXPECT_EQ(k4.witness->where.lines.size(), 6u);
  EXPECT_EQ(k4.witness->deficit, 1);
}

TEST(BruteForce, FirstWitnessIsSmallest) {
  // A doubled-up line: two lines through the same two points violate
  // (2,2,3,3) on 2 points + 2 lines (8 > 7), which precedes the full support.
  const auto g = incidence_geometry::from_names(
      {"a", "b", "c"}, {"x", "y", "z"},
      {{"a", "x"}, {"b", "x"}, {"a", "y"}, {"b", "y"}, {"b", "z"}, {"c", "z"}});
  const auto v = brute_force_verdict(g, kRods);
  ASSERT_EQ(v.status, sparsity_status::not_sparse);
  EXPECT_EQ(v.witness->where.points, (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(v.witness->where.lines, (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(v.witness->deficit, 1);
}

TEST(BruteForce, InstanceTooLarge) {
  oracle_bounds small;
  small.max_vertices = 5;
  try {
    brute_force_verdict(load_data("k4.json"), kRods, small);
    FAIL();
  } catch (const error& e) {
    EXPECT_EQ(e.code(), errc::instance_too_large);
  }
}

TEST(MaxSparseSubset, CompleteGraphDropsOneIncidence) {
  const auto g = load_data("k4.json");
  const auto best = max_sparse_subset(g, kRods);
  EXPECT_EQ(best.size(), 11u);
  EXPECT_TRUE(brute_force_is_sparse(g.with_incidences(best), kRods));
}

TEST(MaxSparseSubset, SparseInputIsKept) {
  const auto g = load_data("braced-square-ac.json");
  const auto best = max_sparse_subset(g, kRods);
  EXPECT_EQ(best.size(), g.incidence_count());
}

TEST(MaxSparseSubset, EmptyInput) {
  EXPECT_TRUE(max_sparse_subset(testing::complete(2, 2).with_incidences({}), kRods).empty());
}

TEST(MaxSparseSubset, Bound) {
  oracle_bounds small;
  small.max_incidences = 4;
  EXPECT_THROW(max_sparse_subset(load_data("k4.json"), kRods, small), error);
}

TEST(Blocks, BracedSquareFullSupport) {
  const auto g = load_data("braced-square-ac.json");
  const auto blocks = enumerate_blocks(g, kRods);
  EXPECT_NE(std::find(blocks.begin(), blocks.end(), support::full(g)), blocks.end());
}

TEST(Blocks, SingleIncidence) {
  const auto g = testing::complete(1, 1);
  const auto blocks = enumerate_blocks(g, {1, 1, 1, 1});
  ASSERT_EQ(blocks.size(), 1u);
  EXPECT_EQ(blocks[0], support::full(g));
}

TEST(Blocks, SmallPathMatchesDefinition) {
  const auto g = load_data("small-path.json");
  const auto blocks = enumerate_blocks(g, kRods);
  std::vector<support> expected;
  for (const auto& s : all_supports(g))
    if (s.has_both_parts() && count_inequality(s, kRods) == 0) expected.push_back(s);
  EXPECT_EQ(blocks.size(), expected.size());
  for (const auto& s : expected) EXPECT_NE(std::find(blocks.begin(), blocks.end(), s), blocks.end());
  // Each single incidence, plus ({p1,p2},{l1}).
  EXPECT_EQ(blocks.size(), 4u);
}

TEST(Blocks, RejectNonSparse) {
  try {
    enumerate_blocks(load_data("k4.json"), kRods);
    FAIL();
  } catch (const error& e) {
    EXPECT_EQ(e.code(), errc::not_sparse_input);
  }
}

TEST(BlockClosure, HoldsOnSmallSparseGeometries) {
  std::mt19937_64 rng(43);
  const auto params = testing::valid_params(2, 3, 4);
  int checked = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const auto g = random_geometry(1 + rng() % 3, 1 + rng() % 3, 0.6, rng());
    const auto& p = params[rng() % params.size()];
    if (!brute_force_is_sparse(g, p)) continue;
    const auto rep = verify_block_closure(g, p);
    EXPECT_TRUE(rep.ok()) << p.to_string();
    checked += rep.pairs_checked > 0;
  }
  EXPECT_GT(checked, 20);
}

TEST(BlockClosure, SingleBlockAndDisjointBlocks) {
  const auto single = verify_block_closure(testing::complete(1, 1), {1, 1, 1, 1});
  EXPECT_EQ(single.block_count, 1u);
  EXPECT_EQ(single.pairs_checked, 0u);
  EXPECT_TRUE(single.ok());
  // Two disjoint incidences: two blocks with no common point or line.
  const auto g = incidence_geometry::from_names({"a", "b"}, {"x", "y"}, {{"a", "x"}, {"b", "y"}});
  const auto rep = verify_block_closure(g, {1, 1, 1, 1});
  EXPECT_GE(rep.block_count, 2u);
  EXPECT_TRUE(rep.ok());
}

TEST(MatroidExchange, KPlaneOnTwoByTwo) {
  const auto rep = verify_matroid_exchange(2, 2, {1, 1, 2, 2});
  EXPECT_TRUE(rep.bases_nonempty());
  EXPECT_TRUE(rep.exchange_holds());
  // Tight sets are all 4 incidences: 2 + 4 - 2.
  EXPECT_EQ(rep.bases_count, 1u);
}

TEST(MatroidExchange, LambdaOneAlwaysExchanges) {
  for (const auto& p : testing::valid_params(1, 2, 3)) {
    for (std::size_t n = 1; n <= 3; ++n)
      for (std::size_t m = 1; m <= 3; ++m) {
        const auto rep = verify_matroid_exchange(n, m, p);
        EXPECT_TRUE(rep.exchange_holds()) << p.to_string() << " " << n << "x" << m;
      }
  }
}

TEST(MatroidExchange, BracedSquarePairFails) {
  const auto rep = verify_exchange_pair(load_data("braced-square-ac.json"), load_data("braced-square-bd.json"), kRods);
  EXPECT_TRUE(rep.first_is_basis);
  EXPECT_TRUE(rep.second_is_basis);
  EXPECT_GE(rep.violation_count, 1u);
  EXPECT_EQ(rep.violation_count, 2u);  // both (b,e5) and (d,e5)
}

TEST(MatroidExchange, NoBases) {
  // 2|I| = 2 + 6 - 3 is odd.
  const auto rep = verify_matroid_exchange(1, 2, kRods);
  EXPECT_EQ(rep.bases_count, 0u);
  EXPECT_FALSE(rep.bases_nonempty());
}

TEST(MatroidExchange, Errors) {
  EXPECT_THROW(verify_matroid_exchange(4, 4, {1, 1, 2, 2}), error);
  try {
    verify_exchange_pair(load_data("braced-square-ac.json"), load_data("small-path.json"), kRods);
    FAIL();
  } catch (const error& e) {
    EXPECT_EQ(e.code(), errc::ground_set_mismatch);
  }
}

TEST(HypergraphOracle, TriangleAndCompleteGraph) {
  const auto tri = load_hypergraph(testing::read_data("triangle.json"));
  EXPECT_EQ(hypergraph_verdict(tri, 2, 3), sparsity_status::tight);
  const auto k4 = load_hypergraph(testing::read_data("k4-graph.json"));
  EXPECT_EQ(hypergraph_verdict(k4, 2, 3), sparsity_status::not_sparse);
  EXPECT_EQ(hypergraph_verdict(k4, 2, 2), sparsity_status::tight);
}

}  // namespace
}  // namespace pebble
