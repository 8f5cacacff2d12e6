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

#include <cstddef>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "latdim/graph.hpp"

// Deterministic graph families for fixtures, benchmarks and the CLI `gen`
// subcommand. Bad parameters throw std::invalid_argument.
namespace latdim::gen {

inline Graph path(std::size_t n) {
  if (n == 0) throw std::invalid_argument("path needs at least one vertex");
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph(n, std::move(edges));
}

// Odd lengths are allowed; they make handy negative fixtures.
inline Graph cycle(std::size_t n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return Graph(n, std::move(edges));
}

inline Graph hypercube(std::size_t k) {
  if (k > 20) throw std::invalid_argument("hypercube dimension above 20");
  const std::size_t n = std::size_t{1} << k;
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v)
    for (std::size_t b = 0; b < k; ++b)
      if (!(v >> b & 1u)) edges.emplace_back(v, v | (std::size_t{1} << b));
  return Graph(n, std::move(edges));
}

// Vertex (r, c) has id r * cols + c.
inline Graph grid(std::size_t rows, std::size_t cols) {
  if (rows == 0 || cols == 0) throw std::invalid_argument("empty grid");
  std::vector<Edge> edges;
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) {
      const Vertex v = r * cols + c;
      if (c + 1 < cols) edges.emplace_back(v, v + 1);
      if (r + 1 < rows) edges.emplace_back(v, v + cols);
    }
  return Graph(rows * cols, std::move(edges));
}

// Vertex i > 0 attaches to a parent drawn uniformly from 0..i-1 using
// mt19937_64, whose output sequence is fixed by the standard.
inline Graph random_tree(std::size_t n, std::uint64_t seed) {
  if (n == 0) throw std::invalid_argument("tree needs at least one vertex");
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) edges.emplace_back(rng() % v, v);
  return Graph(n, std::move(edges));
}

inline Graph star(std::size_t leaves) {
  std::vector<Edge> edges;
  for (Vertex v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
  return Graph(leaves + 1, std::move(edges));
}

// Center 0 with `legs` paths of `leg_length` edges each.
inline Graph spider(std::size_t legs, std::size_t leg_length) {
  if (leg_length == 0) throw std::invalid_argument("spider legs need length");
  std::vector<Edge> edges;
  Vertex next = 1;
  for (std::size_t l = 0; l < legs; ++l) {
    Vertex prev = 0;
    for (std::size_t s = 0; s < leg_length; ++s) {
      edges.emplace_back(prev, next);
      prev = next++;
    }
  }
  return Graph(next, std::move(edges));
}

inline Graph complete(std::size_t n) {
  if (n == 0) throw std::invalid_argument("complete graph needs a vertex");
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph(n, std::move(edges));
}

// Parts are 0..a-1 and a..a+b-1.
inline Graph complete_bipartite(std::size_t a, std::size_t b) {
  if (a == 0 || b == 0) throw std::invalid_argument("empty side");
  std::vector<Edge> edges;
  for (Vertex u = 0; u < a; ++u)
    for (Vertex v = 0; v < b; ++v) edges.emplace_back(u, a + v);
  return Graph(a + b, std::move(edges));
}

inline Graph petersen() {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);
    edges.emplace_back(i, i + 5);
    edges.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  return Graph(10, std::move(edges));
}

// Cartesian product; vertex (g, h) has id g * |H| + h.
inline Graph product(const Graph& a, const Graph& b) {
  const std::size_t nb = b.vertex_count();
  std::vector<Edge> edges;
  for (Vertex x = 0; x < a.vertex_count(); ++x)
    for (const auto& [u, v] : b.edges()) edges.emplace_back(x * nb + u, x * nb + v);
  for (const auto& [u, v] : a.edges())
    for (Vertex y = 0; y < nb; ++y) edges.emplace_back(u * nb + y, v * nb + y);
  return Graph(a.vertex_count() * nb, std::move(edges));
}

// Graph with vertex v renamed to perm[v].
inline Graph relabel(const Graph& g, const std::vector<Vertex>& perm) {
  if (perm.size() != g.vertex_count())
    throw std::invalid_argument("permutation size mismatch");
  std::vector<Edge> edges;
  for (const auto& [u, v] : g.edges()) edges.emplace_back(perm[u], perm[v]);
  return Graph(g.vertex_count(), std::move(edges));
}

}  // namespace latdim::gen
