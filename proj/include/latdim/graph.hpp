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
#include <charconv>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "latdim/error.hpp"

namespace latdim {

using Vertex = std::size_t;
using Edge = std::pair<Vertex, Vertex>;

// Undirected simple graph on vertices 0..n-1. Edges are stored with u < v and
// sorted lexicographically; adjacency lists are sorted.
class Graph {
 public:
  Graph() = default;

  // Throws SelfLoop or VertexOutOfRange. Duplicate edges (in either
  // orientation) are collapsed; duplicates_collapsed() reports how many.
  Graph(std::size_t vertex_count, std::vector<Edge> edges)
      : n_(vertex_count), adjacency_(vertex_count) {
    for (auto& [u, v] : edges) {
      if (u >= n_ || v >= n_)
        throw Error(ErrorKind::VertexOutOfRange,
                    "edge " + std::to_string(u) + " " + std::to_string(v) +
                        " outside 0.." + std::to_string(n_ == 0 ? 0 : n_ - 1));
      if (u == v)
        throw Error(ErrorKind::SelfLoop, "vertex " + std::to_string(u));
      if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    const auto last = std::unique(edges.begin(), edges.end());
    duplicates_ = static_cast<std::size_t>(edges.end() - last);
    edges.erase(last, edges.end());
    edges_ = std::move(edges);
    for (const auto& [u, v] : edges_) {
      adjacency_[u].push_back(v);
      adjacency_[v].push_back(u);
    }
    for (auto& list : adjacency_) std::sort(list.begin(), list.end());
  }

  std::size_t vertex_count() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  std::span<const Vertex> neighbors(Vertex v) const noexcept {
    return adjacency_[v];
  }
  std::size_t degree(Vertex v) const noexcept { return adjacency_[v].size(); }
  bool has_edge(Vertex u, Vertex v) const noexcept {
    return std::binary_search(adjacency_[u].begin(), adjacency_[u].end(), v);
  }
  std::size_t duplicates_collapsed() const noexcept { return duplicates_; }

  friend bool operator==(const Graph& a, const Graph& b) noexcept {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
  std::size_t duplicates_ = 0;
};

namespace detail {

inline std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\f\v");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\f\v");
  return s.substr(first, last - first + 1);
}

// Splits on blanks; returns false if any token is not a non-negative integer.
inline bool parse_unsigned_tokens(std::string_view line,
                                  std::vector<std::size_t>& out) {
  out.clear();
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    if (i == line.size()) break;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    std::size_t value = 0;
    const auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + j, value);
    if (ec != std::errc{} || ptr != line.data() + j) return false;
    out.push_back(value);
    i = j;
  }
  return true;
}

}  // namespace detail

// Parses a whitespace edge list: one "u v" pair per line, '#' starts a
// comment, blank lines are ignored. The vertex count is 1 + the largest id.
// Duplicate edges are collapsed and reported through `warnings`.
inline Graph parse_edge_list(std::string_view text,
                             std::vector<std::string>* warnings = nullptr) {
  std::vector<Edge> edges;
  std::vector<std::size_t> tokens;
  std::size_t max_id = 0;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    line = detail::trim(line);
    if (line.empty()) continue;
    if (!detail::parse_unsigned_tokens(line, tokens) || tokens.size() != 2)
      throw Error(ErrorKind::MalformedLine,
                  "line " + std::to_string(line_no) + ": '" + std::string(line) +
                      "'");
    if (tokens[0] == tokens[1])
      throw Error(ErrorKind::SelfLoop, "line " + std::to_string(line_no) +
                                           ": vertex " +
                                           std::to_string(tokens[0]));
    max_id = std::max({max_id, tokens[0], tokens[1]});
    edges.emplace_back(tokens[0], tokens[1]);
  }
  if (edges.empty()) throw Error(ErrorKind::EmptyInput, "no edges");
  Graph g(max_id + 1, std::move(edges));
  if (g.duplicates_collapsed() > 0 && warnings != nullptr)
    warnings->push_back("collapsed " + std::to_string(g.duplicates_collapsed()) +
                        " duplicate edge(s)");
  return g;
}

// Canonical edge-list rendering: one "u v" line per edge, u < v, sorted.
inline std::string render_edge_list(const Graph& g) {
  std::ostringstream out;
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

// Throws EmptyInput, Disconnected or NotBipartite. Isolated ids count as
// separate components, so gaps in the id range are rejected.
inline void validate(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n == 0) throw Error(ErrorKind::EmptyInput, "graph has no vertices");
  std::vector<int> side(n, -1);
  std::vector<Vertex> queue;
  queue.reserve(n);
  side[0] = 0;
  queue.push_back(0);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex u = queue[head];
    for (Vertex w : g.neighbors(u)) {
      if (side[w] < 0) {
        side[w] = 1 - side[u];
        queue.push_back(w);
      } else if (side[w] == side[u]) {
        throw Error(ErrorKind::NotBipartite,
                    "odd cycle through edge " + std::to_string(u) + " " +
                        std::to_string(w));
      }
    }
  }
  if (queue.size() != n) {
    const auto missing = static_cast<std::size_t>(
        std::find(side.begin(), side.end(), -1) - side.begin());
    throw Error(ErrorKind::Disconnected,
                "vertex " + std::to_string(missing) +
                    " unreachable from vertex 0");
  }
}

// Dense n x n hop-distance table. Entries are 16-bit, which bounds n.
class DistanceMatrix {
 public:
  using Distance = std::uint16_t;
  static constexpr std::size_t kMaxVertices =
      std::numeric_limits<Distance>::max();
  static constexpr Distance kUnreachable = std::numeric_limits<Distance>::max();

  DistanceMatrix() = default;
  explicit DistanceMatrix(std::size_t n) : n_(n) {
    if (n > kMaxVertices)
      throw Error(ErrorKind::TooLarge,
                  std::to_string(n) + " vertices exceeds distance-table limit " +
                      std::to_string(kMaxVertices));
    data_.assign(n * n, kUnreachable);
  }

  std::size_t size() const noexcept { return n_; }
  Distance operator()(Vertex u, Vertex v) const noexcept {
    return data_[u * n_ + v];
  }
  std::span<const Distance> row(Vertex u) const noexcept {
    return {data_.data() + u * n_, n_};
  }
  std::span<Distance> row(Vertex u) noexcept {
    return {data_.data() + u * n_, n_};
  }
  Distance max() const noexcept {
    return data_.empty() ? 0 : *std::max_element(data_.begin(), data_.end());
  }

 private:
  std::size_t n_ = 0;
  std::vector<Distance> data_;
};

// One BFS per source; O(nm). Unreachable pairs keep kUnreachable.
inline DistanceMatrix all_pairs_distances(const Graph& g) {
  const std::size_t n = g.vertex_count();
  DistanceMatrix dm(n);
  std::vector<Vertex> queue(n);
  for (Vertex s = 0; s < n; ++s) {
    auto dist = dm.row(s);
    std::size_t head = 0, tail = 0;
    dist[s] = 0;
    queue[tail++] = s;
    while (head < tail) {
      const Vertex u = queue[head++];
      const auto next = static_cast<DistanceMatrix::Distance>(dist[u] + 1);
      for (Vertex w : g.neighbors(u)) {
        if (dist[w] == DistanceMatrix::kUnreachable) {
          dist[w] = next;
          queue[tail++] = w;
        }
      }
    }
  }
  return dm;
}

}  // namespace latdim
