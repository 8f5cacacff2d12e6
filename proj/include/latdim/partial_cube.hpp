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
#include <string>
#include <vector>

#include "latdim/bitset.hpp"
#include "latdim/error.hpp"
#include "latdim/graph.hpp"

namespace latdim {

// Partition of E(G) into Djokovic-Winkler classes. Class i was opened by
// edge classes[i].front(); classes are numbered in edge-scan order.
struct ThetaClasses {
  std::vector<std::vector<Edge>> classes;
  std::vector<std::size_t> class_of_edge;  // parallel to Graph::edges()

  std::size_t size() const noexcept { return classes.size(); }
};

// Isometry mu: V -> {0,1}^tau, stored as one tau-bit label per vertex.
struct HypercubeLabeling {
  std::size_t tau = 0;
  std::vector<DynamicBitset> labels;         // labels[v] has tau bits
  std::vector<std::vector<Edge>> classes;    // edges flipping coordinate i

  std::size_t vertex_count() const noexcept { return labels.size(); }
  bool bit(Vertex v, std::size_t i) const noexcept { return labels[v].test(i); }
};

// Groups edges by the one-endpoint test against W(u,v) = {w : d(w,u) <
// d(w,v)}. Runs in O(tau * (n + m)) given the distance table. Edges already
// assigned to an earlier class are never reassigned; on non-partial-cubes the
// result is inconsistent and verify_labeling rejects it.
inline ThetaClasses theta_classes(const Graph& g, const DistanceMatrix& dm) {
  const auto& edges = g.edges();
  const std::size_t n = g.vertex_count();
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  ThetaClasses out;
  out.class_of_edge.assign(edges.size(), kNone);
  std::vector<char> near_u(n);
  for (std::size_t e = 0; e < edges.size(); ++e) {
    if (out.class_of_edge[e] != kNone) continue;
    const auto [u, v] = edges[e];
    const auto du = dm.row(u);
    const auto dv = dm.row(v);
    for (Vertex w = 0; w < n; ++w) near_u[w] = du[w] < dv[w];
    const std::size_t id = out.classes.size();
    auto& cls = out.classes.emplace_back();
    for (std::size_t f = e; f < edges.size(); ++f) {
      if (out.class_of_edge[f] != kNone) continue;
      const auto [a, b] = edges[f];
      if (near_u[a] != near_u[b]) {
        out.class_of_edge[f] = id;
        cls.push_back(edges[f]);
      }
    }
  }
  return out;
}

// mu(base) is all zeros; bit i of mu(w) is 0 iff w is strictly nearer the
// endpoint of class i's opening edge that lies on base's side.
inline HypercubeLabeling labeling_from_classes(const Graph& g,
                                               const DistanceMatrix& dm,
                                               const ThetaClasses& classes,
                                               Vertex base = 0) {
  const std::size_t n = g.vertex_count();
  HypercubeLabeling lab;
  lab.tau = classes.size();
  lab.labels.assign(n, DynamicBitset(lab.tau));
  lab.classes = classes.classes;
  for (std::size_t i = 0; i < lab.tau; ++i) {
    auto [near, far] = classes.classes[i].front();
    if (dm(base, far) < dm(base, near)) std::swap(near, far);
    const auto dn = dm.row(near);
    const auto df = dm.row(far);
    for (Vertex w = 0; w < n; ++w) {
      if (dn[w] == df[w])
        throw Error(ErrorKind::InconsistentClass,
                    "vertex " + std::to_string(w) + " equidistant from " +
                        std::to_string(near) + " and " + std::to_string(far));
      if (df[w] < dn[w]) lab.labels[w].set(i);
    }
  }
  return lab;
}

// Accepts iff Hamming(mu(u), mu(v)) == d(u,v) for every pair and every
// coordinate takes both values. Throws NotPartialCube naming the first bad
// pair in (u, v) lexicographic order.
inline void verify_labeling(const Graph& g, const DistanceMatrix& dm,
                            const HypercubeLabeling& lab) {
  const std::size_t n = g.vertex_count();
  if (lab.labels.size() != n)
    throw Error(ErrorKind::NotPartialCube,
                "labeling covers " + std::to_string(lab.labels.size()) +
                    " vertices, graph has " + std::to_string(n));
  for (const auto& l : lab.labels)
    if (l.size() != lab.tau)
      throw Error(ErrorKind::NotPartialCube, "label length differs from tau");
  for (Vertex u = 0; u < n; ++u) {
    const auto du = dm.row(u);
    for (Vertex v = u + 1; v < n; ++v) {
      const std::size_t h = lab.labels[u].hamming(lab.labels[v]);
      if (h != du[v])
        throw Error(ErrorKind::NotPartialCube,
                    "pair (" + std::to_string(u) + ", " + std::to_string(v) +
                        "): hamming " + std::to_string(h) + " != distance " +
                        std::to_string(du[v]),
                    Violation{u, v, h, du[v]});
    }
  }
  if (n == 0) return;
  DynamicBitset ones(lab.tau), zeros(lab.tau);
  zeros.set_all();
  for (const auto& l : lab.labels) {
    ones |= l;
    zeros &= l;
  }
  if (!ones.all() || !zeros.none())
    throw Error(ErrorKind::NotPartialCube, "labeling is not full-dimensional");
}

// validate -> distances -> classes -> labeling -> verify. The distance table
// may be supplied to avoid recomputation.
inline HypercubeLabeling recognize(const Graph& g, const DistanceMatrix& dm,
                                   Vertex base = 0) {
  validate(g);
  const auto classes = theta_classes(g, dm);
  auto lab = labeling_from_classes(g, dm, classes, base);
  verify_labeling(g, dm, lab);
  return lab;
}

inline HypercubeLabeling recognize(const Graph& g, Vertex base = 0) {
  validate(g);
  return recognize(g, all_pairs_distances(g), base);
}

}  // namespace latdim
