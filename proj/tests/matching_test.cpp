// Copyright 2026 The latdim Authors
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

#include "latdim/matching.hpp"

#include <random>

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "latdim/generators.hpp"
#include "latdim/partial_cube.hpp"

namespace latdim {
namespace {

SemicubeGraph sc_of(const Graph& g) {
  return build_semicube_graph(semicubes(recognize(g)));
}

SemicubeGraph triangle() { return SemicubeGraph(3, {{0, 1}, {1, 2}, {0, 2}}); }

SemicubeGraph random_graph(std::size_t n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (coin(rng)) edges.emplace_back(a, b);
  return SemicubeGraph(n, std::move(edges));
}

void expect_valid_matching(const SemicubeGraph& sg, const Matching& m) {
  for (std::size_t x = 0; x < m.vertex_count(); ++x) {
    if (!m.is_matched(x)) continue;
    EXPECT_EQ(m.mate(m.mate(x)), x);
    EXPECT_TRUE(sg.has_edge(x, m.mate(x)));
  }
}

TEST(MaximumMatching, Examples) {
  EXPECT_EQ(maximum_matching(sc_of(gen::path(3))).size(), 1u);
  EXPECT_EQ(maximum_matching(sc_of(gen::star(3))).size(), 1u);
  EXPECT_EQ(maximum_matching(sc_of(gen::cycle(6))).size(), 0u);
  EXPECT_EQ(maximum_matching(SemicubeGraph()).size(), 0u);
}

TEST(MaximumMatching, OddCycleWithPendants) {
  // Greedy leaves 6 and 7 exposed; one augmentation makes it perfect.
  const SemicubeGraph g(8, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 5},
                            {5, 6}, {3, 7}, {4, 7}});
  const Matching m = maximum_matching(g);
  expect_valid_matching(g, m);
  EXPECT_EQ(m.size(), brute_force_matching_size(g));
  EXPECT_EQ(m.size(), 4u);
}

TEST(MaximumMatching, DeterministicTieBreak) {
  const SemicubeGraph g = triangle();
  EXPECT_EQ(maximum_matching(g).edges(), (std::vector<Edge>{{0, 1}}));
}

TEST(BruteForceMatchingSize, Examples) {
  EXPECT_EQ(brute_force_matching_size(triangle()), 1u);
  EXPECT_EQ(brute_force_matching_size(
                SemicubeGraph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}})),
            2u);
  EXPECT_EQ(brute_force_matching_size(SemicubeGraph(6, {})), 0u);
  try {
    brute_force_matching_size(SemicubeGraph(25, {}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::TooLarge);
  }
}

TEST(MaximumMatching, AgreesWithBruteForceOnRandomGraphs) {
  std::uint64_t seed = 1;
  for (std::size_t n : {5u, 8u, 11u, 14u, 17u, 20u, 24u})
    for (double p : {0.1, 0.2, 0.35, 0.6})
      for (int rep = 0; rep < 5; ++rep) {
        const auto g = random_graph(n, p, seed++);
        const Matching m = maximum_matching(g);
        expect_valid_matching(g, m);
        ASSERT_EQ(m.size(), brute_force_matching_size(g))
            << "n=" << n << " p=" << p << " seed=" << seed - 1;
      }
}

TEST(MaximumMatching, AgreesWithBruteForceOnSemicubeGraphs) {
  for (const auto& [name, g] : testing::partial_cube_corpus()) {
    const auto sg = sc_of(g);
    if (sg.vertex_count() > kBruteForceMatchingMaxVertices) continue;
    EXPECT_EQ(maximum_matching(sg).size(), brute_force_matching_size(sg)) << name;
  }
}

TEST(MaximumMatching, SizeInvariantUnderRelabeling) {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const auto g = random_graph(30 + seed % 20, 0.15, seed);
    const auto perm = testing::random_permutation(g.vertex_count(), seed + 100);
    std::vector<Edge> moved;
    for (const auto& [a, b] : g.edges()) moved.emplace_back(perm[a], perm[b]);
    const SemicubeGraph h(g.vertex_count(), moved);
    EXPECT_EQ(maximum_matching(g).size(), maximum_matching(h).size()) << seed;
  }
}

TEST(VerifyMatching, Examples) {
  const auto p3 = sc_of(gen::path(3));
  try {
    verify_matching(p3, Matching(p3.vertex_count()));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotMaximum);
  }
  EXPECT_NO_THROW(verify_matching(triangle(), Matching(3, {{0, 1}})));
  try {
    matching_from_pairs(triangle(), {{0, 1}, {1, 2}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotAMatching);
  }
  try {
    verify_matching(SemicubeGraph(4, {{0, 1}, {2, 3}}), Matching(4, {{0, 2}}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotAMatching);
  }
}

TEST(MaximumMatching, LargeDenseSemicubeGraph) {
  // Tree semicube graphs have one edge per pair of tree edges.
  const Graph t = gen::random_tree(600, 5);
  const auto sg = sc_of(t);
  EXPECT_EQ(sg.edge_count(), 599u * 598u / 2);
  const Matching m = maximum_matching(sg);
  expect_valid_matching(sg, m);
  EXPECT_EQ(599 - m.size(), (testing::leaf_count(t) + 1) / 2);
}

}  // namespace
}  // namespace latdim
