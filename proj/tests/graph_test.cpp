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

#include "latdim/graph.hpp"

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "latdim/generators.hpp"

namespace latdim {
namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "expected an Error";
  return ErrorKind::EmptyInput;
}

TEST(ParseEdgeList, PathOfThree) {
  const Graph g = parse_edge_list("0 1\n1 2");
  EXPECT_EQ(g.vertex_count(), 3u);
  EXPECT_EQ(g.edges(), (std::vector<Edge>{{0, 1}, {1, 2}}));
}

TEST(ParseEdgeList, DuplicateCollapsedWithWarning) {
  std::vector<std::string> warnings;
  const Graph g = parse_edge_list("0 1\n1 0\n", &warnings);
  EXPECT_EQ(g.vertex_count(), 2u);
  EXPECT_EQ(g.edge_count(), 1u);
  ASSERT_EQ(warnings.size(), 1u);
  EXPECT_NE(warnings[0].find("duplicate"), std::string::npos);
}

TEST(ParseEdgeList, CommentsAndBlankLines) {
  const Graph g = parse_edge_list("# header\n\n  3 2  # trailing\n\t1 2\r\n");
  EXPECT_EQ(g.vertex_count(), 4u);
  EXPECT_EQ(g.edges(), (std::vector<Edge>{{1, 2}, {2, 3}}));
}

TEST(ParseEdgeList, Rejections) {
  EXPECT_EQ(kind_of([] { parse_edge_list("0 0"); }), ErrorKind::SelfLoop);
  EXPECT_EQ(kind_of([] { parse_edge_list(""); }), ErrorKind::EmptyInput);
  EXPECT_EQ(kind_of([] { parse_edge_list("# only a comment\n"); }),
            ErrorKind::EmptyInput);
  EXPECT_EQ(kind_of([] { parse_edge_list("0 1 2"); }), ErrorKind::MalformedLine);
  EXPECT_EQ(kind_of([] { parse_edge_list("0"); }), ErrorKind::MalformedLine);
  EXPECT_EQ(kind_of([] { parse_edge_list("0 -1"); }), ErrorKind::MalformedLine);
  EXPECT_EQ(kind_of([] { parse_edge_list("a b"); }), ErrorKind::MalformedLine);
}

TEST(ParseEdgeList, RenderRoundTrip) {
  for (const auto& [name, g] : testing::partial_cube_corpus()) {
    if (g.edge_count() == 0) continue;
    EXPECT_EQ(parse_edge_list(render_edge_list(g)), g) << name;
  }
  const Graph shuffled = gen::relabel(gen::grid(4, 5), testing::random_permutation(20, 9));
  EXPECT_EQ(parse_edge_list(render_edge_list(shuffled)), shuffled);
}

TEST(Validate, Examples) {
  EXPECT_NO_THROW(validate(gen::cycle(4)));
  EXPECT_EQ(kind_of([] { validate(gen::complete(3)); }), ErrorKind::NotBipartite);
  EXPECT_EQ(kind_of([] { validate(Graph(4, {{0, 1}, {2, 3}})); }),
            ErrorKind::Disconnected);
  // An id gap leaves an isolated vertex.
  EXPECT_EQ(kind_of([] { validate(parse_edge_list("0 1\n1 3")); }),
            ErrorKind::Disconnected);
  EXPECT_NO_THROW(validate(Graph(1, {})));
  EXPECT_EQ(kind_of([] { validate(Graph()); }), ErrorKind::EmptyInput);
}

TEST(AllPairsDistances, Examples) {
  EXPECT_EQ(all_pairs_distances(gen::path(3))(0, 2), 2);
  const auto c6 = all_pairs_distances(gen::cycle(6));
  for (Vertex v = 0; v < 6; ++v) EXPECT_EQ(c6(v, (v + 3) % 6), 3);
  EXPECT_EQ(all_pairs_distances(gen::hypercube(3)).max(), 3);
}

TEST(AllPairsDistances, MetricPropertiesAndOracle) {
  for (const auto& [name, g] : testing::partial_cube_corpus()) {
    const auto dm = all_pairs_distances(g);
    const auto fw = testing::floyd(g);
    const std::size_t n = g.vertex_count();
    for (Vertex u = 0; u < n; ++u) {
      EXPECT_EQ(dm(u, u), 0) << name;
      for (Vertex v = 0; v < n; ++v) {
        ASSERT_EQ(dm(u, v), fw[u][v]) << name;
        ASSERT_EQ(dm(u, v), dm(v, u)) << name;
        ASSERT_EQ(dm(u, v) == 1, g.has_edge(u, v)) << name;
        for (Vertex w = 0; w < n; ++w)
          ASSERT_LE(dm(u, w), dm(u, v) + dm(v, w)) << name;
      }
    }
  }
}

TEST(Graph, RejectsBadEdges) {
  EXPECT_EQ(kind_of([] { Graph(2, {{0, 2}}); }), ErrorKind::VertexOutOfRange);
  EXPECT_EQ(kind_of([] { Graph(2, {{1, 1}}); }), ErrorKind::SelfLoop);
}

}  // namespace
}  // namespace latdim
