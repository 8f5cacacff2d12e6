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

// Exponential brute-force oracles. Only tests and the acceptance suite use
// these; the pipeline never includes this header.

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "latdim/error.hpp"
#include "latdim/graph.hpp"
#include "latdim/semicube.hpp"

namespace latdim::oracle {

struct OracleBudget {
  std::size_t max_vertices = 8;
  std::size_t max_dimension = 7;
};

namespace detail {

constexpr int kFar = 1 << 20;

// Floyd-Warshall; kept separate from all_pairs_distances on purpose.
inline std::vector<std::vector<int>> distances(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<int>> d(n, std::vector<int>(n, kFar));
  for (std::size_t v = 0; v < n; ++v) d[v][v] = 0;
  for (const auto& [u, v] : g.edges()) d[u][v] = d[v][u] = 1;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  return d;
}

inline bool connected(const std::vector<std::vector<int>>& d) {
  for (const auto& row : d)
    for (int x : row)
      if (x >= kFar) return false;
  return true;
}

// BFS order from vertex 0 together with each vertex's first-seen parent.
inline std::pair<std::vector<Vertex>, std::vector<Vertex>> bfs_order(
    const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<Vertex> order{0}, parent(n, 0);
  std::vector<char> seen(n, 0);
  seen[0] = 1;
  for (std::size_t h = 0; h < order.size(); ++h)
    for (Vertex w : g.neighbors(order[h]))
      if (!seen[w]) {
        seen[w] = 1;
        parent[w] = order[h];
        order.push_back(w);
      }
  return {order, parent};
}

inline void check_budget(const Graph& g, const OracleBudget& budget) {
  if (g.vertex_count() > budget.max_vertices)
    throw Error(ErrorKind::TooLarge,
                std::to_string(g.vertex_count()) + " vertices exceeds oracle cap " +
                    std::to_string(budget.max_vertices));
}

}  // namespace detail

// Searches for mu: V -> {0,1}^k with Hamming distance equal to graph
// distance. Vertex 0 maps to zero, vertices are placed in BFS order one bit
// away from their parent, and a fresh coordinate is only ever the lowest
// unused one. A partial cube on n vertices needs at most n - 1 coordinates,
// so that many are allowed.
inline bool is_partial_cube(const Graph& g, const OracleBudget& budget = {}) {
  detail::check_budget(g, budget);
  const std::size_t n = g.vertex_count();
  if (n <= 1) return n == 1;
  const auto dist = detail::distances(g);
  if (!detail::connected(dist)) return false;
  const auto [order, parent] = detail::bfs_order(g);
  std::vector<std::uint32_t> mu(n, 0);
  auto place = [&](auto&& self, std::size_t idx, std::size_t used) -> bool {
    if (idx == n) return true;
    const Vertex v = order[idx];
    const std::size_t limit = std::min(used + 1, n - 1);
    for (std::size_t b = 0; b < limit; ++b) {
      const std::uint32_t cand = mu[parent[v]] ^ (std::uint32_t{1} << b);
      bool ok = true;
      for (std::size_t j = 0; j < idx && ok; ++j) {
        const Vertex w = order[j];
        ok = std::popcount(cand ^ mu[w]) == dist[v][w];
      }
      if (!ok) continue;
      mu[v] = cand;
      if (self(self, idx + 1, std::max(used, b + 1))) return true;
    }
    return false;
  };
  return place(place, 1, 0);
}

// Smallest d admitting lambda: V -> Z^d with L1 distance equal to graph
// distance. Vertex 0 sits at the origin, each vertex is one unit step from its
// BFS parent, fresh axes are introduced in order and only in the + direction.
// Throws NotEmbeddable when no d <= budget.max_dimension works.
inline std::size_t min_lattice_dimension(const Graph& g,
                                         const OracleBudget& budget = {}) {
  detail::check_budget(g, budget);
  const std::size_t n = g.vertex_count();
  if (n == 0) throw Error(ErrorKind::EmptyInput, "graph has no vertices");
  if (n == 1) return 0;
  const auto dist = detail::distances(g);
  if (!detail::connected(dist))
    throw Error(ErrorKind::NotEmbeddable, "graph is disconnected");
  const auto [order, parent] = detail::bfs_order(g);
  for (std::size_t d = 1; d <= budget.max_dimension; ++d) {
    std::vector<std::vector<int>> pos(n, std::vector<int>(d, 0));
    auto place = [&](auto&& self, std::size_t idx, std::size_t used) -> bool {
      if (idx == n) return true;
      const Vertex v = order[idx];
      const std::size_t limit = std::min(used + 1, d);
      for (std::size_t axis = 0; axis < limit; ++axis) {
        for (int step : {1, -1}) {
          if (axis == used && step < 0) continue;
          pos[v] = pos[parent[v]];
          pos[v][axis] += step;
          bool ok = true;
          for (std::size_t j = 0; j < idx && ok; ++j) {
            const Vertex w = order[j];
            int l1 = 0;
            for (std::size_t a = 0; a < d; ++a) l1 += std::abs(pos[v][a] - pos[w][a]);
            ok = l1 == dist[v][w];
          }
          if (ok && self(self, idx + 1, std::max(used, axis + 1))) return true;
        }
      }
      return false;
    };
    if (place(place, 1, 0)) return d;
  }
  throw Error(ErrorKind::NotEmbeddable,
              "no lattice embedding up to dimension " +
                  std::to_string(budget.max_dimension));
}

// Number of semicubes containing u but not v, by direct scan.
inline std::size_t semicube_count_distance(const SemicubeFamily& fam, Vertex u,
                                           Vertex v) {
  std::size_t c = 0;
  for (SemicubeId x = 0; x < fam.size(); ++x)
    if (fam[x].test(u) && !fam[x].test(v)) ++c;
  return c;
}

// Every connected bipartite graph on n vertices, one per isomorphism class.
// Side A is 0..a-1 and side B is a..n-1 with a <= b. A graph is keyed by the
// lexicographically least sorted column-mask list over all row orders (and
// over transposition when a == b). Practical up to n = 8.
inline std::vector<Graph> connected_bipartite_graphs(std::size_t n) {
  if (n == 0) return {};
  if (n == 1) return {Graph(1, {})};
  if (n > 10) throw Error(ErrorKind::TooLarge, "enumeration capped at 10");
  std::vector<Graph> out;
  for (std::size_t a = 1; a <= n / 2; ++a) {
    const std::size_t b = n - a;
    std::set<std::vector<std::uint32_t>> seen;
    auto canon_side = [&](const std::vector<std::uint32_t>& cols,
                          std::size_t nrows) {
      std::vector<std::size_t> perm(nrows);
      std::iota(perm.begin(), perm.end(), 0);
      std::vector<std::uint32_t> best;
      do {
        std::vector<std::uint32_t> c(cols.size(), 0);
        for (std::size_t j = 0; j < cols.size(); ++j)
          for (std::size_t i = 0; i < nrows; ++i)
            if (cols[j] >> i & 1u) c[j] |= std::uint32_t{1} << perm[i];
        std::sort(c.begin(), c.end());
        if (best.empty() || c < best) best = std::move(c);
      } while (std::next_permutation(perm.begin(), perm.end()));
      return best;
    };
    const std::uint64_t total = std::uint64_t{1} << (a * b);
    for (std::uint64_t mask = 0; mask < total; ++mask) {
      // cols[j]: which A-vertices touch B-vertex j.
      std::vector<std::uint32_t> cols(b, 0);
      for (std::size_t i = 0; i < a; ++i)
        for (std::size_t j = 0; j < b; ++j)
          if (mask >> (i * b + j) & 1u) cols[j] |= std::uint32_t{1} << i;
      if (std::find(cols.begin(), cols.end(), 0u) != cols.end()) continue;
      // Connectivity via union of A-masks reachable through shared columns.
      std::uint32_t reach = 1;
      for (bool grew = true; grew;) {
        grew = false;
        for (std::uint32_t c : cols)
          if ((c & reach) && (c | reach) != reach) {
            reach |= c;
            grew = true;
          }
      }
      if (reach != (std::uint32_t{1} << a) - 1) continue;
      auto key = canon_side(cols, a);
      if (a == b) {
        std::vector<std::uint32_t> t(a, 0);
        for (std::size_t j = 0; j < b; ++j)
          for (std::size_t i = 0; i < a; ++i)
            if (cols[j] >> i & 1u) t[i] |= std::uint32_t{1} << j;
        key = std::min(key, canon_side(t, b));
      }
      if (!seen.insert(key).second) continue;
      std::vector<Edge> edges;
      for (std::size_t j = 0; j < b; ++j)
        for (std::size_t i = 0; i < a; ++i)
          if (key[j] >> i & 1u) edges.emplace_back(i, a + j);
      out.emplace_back(n, std::move(edges));
    }
  }
  return out;
}

}  // namespace latdim::oracle
