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

#include <algorithm>
#include <cstddef>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "latdim/bitset.hpp"
#include "latdim/partial_cube.hpp"

namespace latdim {

using SemicubeId = std::size_t;

constexpr SemicubeId semicube_id(std::size_t coordinate, unsigned side) noexcept {
  return 2 * coordinate + side;
}
constexpr SemicubeId complement(SemicubeId x) noexcept { return x ^ 1u; }

// The 2*tau vertex sets S(i, chi) = {v : mu_i(v) = chi}, indexed by
// semicube_id(i, chi).
class SemicubeFamily {
 public:
  SemicubeFamily() = default;
  SemicubeFamily(std::size_t vertex_count, std::vector<DynamicBitset> sets)
      : n_(vertex_count), sets_(std::move(sets)) {}

  std::size_t vertex_count() const noexcept { return n_; }
  std::size_t tau() const noexcept { return sets_.size() / 2; }
  std::size_t size() const noexcept { return sets_.size(); }
  const DynamicBitset& operator[](SemicubeId x) const noexcept {
    return sets_[x];
  }
  const std::vector<DynamicBitset>& sets() const noexcept { return sets_; }

 private:
  std::size_t n_ = 0;
  std::vector<DynamicBitset> sets_;
};

inline SemicubeFamily semicubes(const HypercubeLabeling& lab) {
  const std::size_t n = lab.vertex_count();
  std::vector<DynamicBitset> sets(2 * lab.tau, DynamicBitset(n));
  for (Vertex v = 0; v < n; ++v)
    for (std::size_t i = 0; i < lab.tau; ++i)
      sets[semicube_id(i, lab.bit(v, i) ? 1 : 0)].set(v);
  return SemicubeFamily(n, std::move(sets));
}

// Simple undirected graph on semicube ids with sorted adjacency lists. Also
// used as the generic host graph for matching.
class SemicubeGraph {
 public:
  SemicubeGraph() = default;
  SemicubeGraph(std::size_t vertex_count, std::vector<Edge> edges)
      : adjacency_(vertex_count) {
    for (auto& [a, b] : edges)
      if (a > b) std::swap(a, b);
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    edges_ = std::move(edges);
    for (const auto& [a, b] : edges_) {
      adjacency_[a].push_back(b);
      adjacency_[b].push_back(a);
    }
    for (auto& list : adjacency_) std::sort(list.begin(), list.end());
  }

  std::size_t vertex_count() const noexcept { return adjacency_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  std::span<const std::size_t> neighbors(std::size_t x) const noexcept {
    return adjacency_[x];
  }
  bool has_edge(std::size_t a, std::size_t b) const noexcept {
    return std::binary_search(adjacency_[a].begin(), adjacency_[a].end(), b);
  }

 private:
  std::vector<Edge> edges_;
  std::vector<std::vector<std::size_t>> adjacency_;
};

// x ~ y iff S_x | S_y == V and S_x & S_y != {}. Every pair is tested with
// word-parallel bitset operations: O(n tau^2 / w).
inline SemicubeGraph build_semicube_graph(const SemicubeFamily& fam) {
  const std::size_t k = fam.size();
  std::vector<Edge> edges;
  for (SemicubeId x = 0; x < k; ++x) {
    const auto& sx = fam[x];
    for (SemicubeId y = x + 1; y < k; ++y) {
      if (y == complement(x)) continue;
      if (covers_all(sx, fam[y]) && intersects(sx, fam[y]))
        edges.emplace_back(x, y);
    }
  }
  return SemicubeGraph(k, std::move(edges));
}

inline std::string semicube_label(SemicubeId x) {
  return std::to_string(x / 2) + ":" + std::to_string(x % 2);
}

inline std::string export_dot(const SemicubeGraph& sg) {
  std::ostringstream out;
  out << "graph semicubes {\n";
  for (SemicubeId x = 0; x < sg.vertex_count(); ++x)
    out << "  " << x << " [label=\"" << semicube_label(x) << "\"];\n";
  for (const auto& [a, b] : sg.edges()) out << "  " << a << " -- " << b << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace latdim
