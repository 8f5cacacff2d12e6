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

#pragma once

// Shared graph corpus and independent helpers for the test suites.

#include <cstddef>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "latdim/generators.hpp"
#include "latdim/graph.hpp"
#include "latdim/semicube.hpp"

namespace latdim::testing {

struct Named {
  std::string name;
  Graph graph;
};

// Partial cubes of assorted shapes, each small enough for all-pairs checks.
inline std::vector<Named> partial_cube_corpus() {
  std::vector<Named> out;
  out.push_back({"K1", Graph(1, {})});
  for (std::size_t n : {2, 3, 5, 9}) out.push_back({"P" + std::to_string(n), gen::path(n)});
  for (std::size_t n : {4, 6, 8, 10, 14}) out.push_back({"C" + std::to_string(n), gen::cycle(n)});
  for (std::size_t k : {1, 2, 3, 4}) out.push_back({"Q" + std::to_string(k), gen::hypercube(k)});
  out.push_back({"grid3x4", gen::grid(3, 4)});
  out.push_back({"grid2x7", gen::grid(2, 7)});
  out.push_back({"K13", gen::star(3)});
  out.push_back({"star6", gen::star(6)});
  out.push_back({"spider5x2", gen::spider(5, 2)});
  out.push_back({"C6xP3", gen::product(gen::cycle(6), gen::path(3))});
  out.push_back({"C4xC6", gen::product(gen::cycle(4), gen::cycle(6))});
  out.push_back({"treexP3", gen::product(gen::random_tree(7, 3), gen::path(3))});
  out.push_back({"star3xP2xP2", gen::product(gen::product(gen::star(3), gen::path(2)), gen::path(2))});
  for (std::uint64_t seed = 1; seed <= 6; ++seed)
    out.push_back({"tree" + std::to_string(seed), gen::random_tree(12 + 5 * seed, seed)});
  return out;
}

// Independent all-pairs distances by Floyd-Warshall.
inline std::vector<std::vector<int>> floyd(const Graph& g) {
  const std::size_t n = g.vertex_count();
  const int inf = 1 << 20;
  std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
  for (std::size_t v = 0; v < n; ++v) d[v][v] = 0;
  for (const auto& [u, v] : g.edges()) d[u][v] = d[v][u] = 1;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (d[i][k] + d[k][j] < d[i][j]) d[i][j] = d[i][k] + d[k][j];
  return d;
}

// Scalar semicube-graph edges: per-vertex loops, no word tricks.
inline std::vector<Edge> naive_semicube_edges(const SemicubeFamily& fam) {
  std::vector<Edge> out;
  const std::size_t n = fam.vertex_count();
  for (std::size_t x = 0; x < fam.size(); ++x)
    for (std::size_t y = x + 1; y < fam.size(); ++y) {
      bool cover = true, meet = false;
      for (std::size_t v = 0; v < n; ++v) {
        const bool a = fam[x].test(v), b = fam[y].test(v);
        cover = cover && (a || b);
        meet = meet || (a && b);
      }
      if (cover && meet) out.emplace_back(x, y);
    }
  return out;
}

inline std::vector<Vertex> random_permutation(std::size_t n, std::uint64_t seed) {
  std::vector<Vertex> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  std::mt19937_64 rng(seed);
  for (std::size_t i = n; i > 1; --i) std::swap(perm[i - 1], perm[rng() % i]);
  return perm;
}

inline std::size_t leaf_count(const Graph& g) {
  std::size_t c = 0;
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) == 1) ++c;
  return c;
}

}  // namespace latdim::testing
