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
#include <cstdlib>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "latdim/error.hpp"
#include "latdim/graph.hpp"
#include "latdim/matching.hpp"
#include "latdim/partial_cube.hpp"
#include "latdim/semicube.hpp"

namespace latdim {

using Coordinate = long;

// The matching plus every complement edge (2i, 2i+1), split into paths.
// Each path starts and ends with a complement edge, so its length is odd.
// Paths are oriented so they start at their smaller endpoint id and are
// ordered by the smallest id they contain.
struct PathDecomposition {
  std::size_t semicube_count = 0;
  std::vector<std::vector<SemicubeId>> paths;

  std::size_t dimension() const noexcept { return paths.size(); }
  std::size_t length(std::size_t i) const noexcept {
    return paths[i].size() - 1;
  }
};

// lambda: V -> Z^d. lower/upper hold the per-axis min and max.
struct LatticeEmbedding {
  std::size_t dimension = 0;
  std::vector<std::vector<Coordinate>> coords;
  std::vector<Coordinate> lower;
  std::vector<Coordinate> upper;

  LatticeEmbedding() = default;
  LatticeEmbedding(std::size_t d, std::vector<std::vector<Coordinate>> c)
      : dimension(d), coords(std::move(c)), lower(d, 0), upper(d, 0) {
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t v = 0; v < coords.size(); ++v) {
        const Coordinate x = coords[v][i];
        if (v == 0 || x < lower[i]) lower[i] = x;
        if (v == 0 || x > upper[i]) upper[i] = x;
      }
    }
  }

  std::size_t vertex_count() const noexcept { return coords.size(); }

  std::size_t l1(Vertex u, Vertex v) const noexcept {
    std::size_t s = 0;
    for (std::size_t i = 0; i < dimension; ++i)
      s += static_cast<std::size_t>(std::labs(coords[u][i] - coords[v][i]));
    return s;
  }
};

inline PathDecomposition path_decomposition(std::size_t semicube_count,
                                            const Matching& m) {
  if (semicube_count % 2 != 0 || m.vertex_count() != semicube_count)
    throw Error(ErrorKind::CycleDetected,
                "matching does not span an even semicube id range");
  for (SemicubeId x = 0; x < semicube_count; ++x)
    if (m.mate(x) == complement(x))
      throw Error(ErrorKind::CycleDetected,
                  "semicube " + semicube_label(x) + " matched to its complement");

  PathDecomposition pd;
  pd.semicube_count = semicube_count;
  std::vector<char> seen(semicube_count, 0);
  for (SemicubeId start = 0; start < semicube_count; ++start) {
    if (seen[start] || m.is_matched(start)) continue;
    std::vector<SemicubeId> path{start};
    seen[start] = 1;
    SemicubeId cur = start;
    for (;;) {
      const SemicubeId across = complement(cur);
      if (seen[across])
        throw Error(ErrorKind::CycleDetected,
                    "semicube " + semicube_label(across) + " revisited");
      seen[across] = 1;
      path.push_back(across);
      if (!m.is_matched(across)) break;
      cur = m.mate(across);
      if (seen[cur])
        throw Error(ErrorKind::CycleDetected,
                    "semicube " + semicube_label(cur) + " revisited");
      seen[cur] = 1;
      path.push_back(cur);
    }
    pd.paths.push_back(std::move(path));
  }
  for (SemicubeId x = 0; x < semicube_count; ++x)
    if (!seen[x])
      throw Error(ErrorKind::CycleDetected,
                  "semicube " + semicube_label(x) + " lies on a cycle");
  std::stable_sort(pd.paths.begin(), pd.paths.end(),
                   [](const auto& a, const auto& b) {
                     return *std::min_element(a.begin(), a.end()) <
                            *std::min_element(b.begin(), b.end());
                   });
  return pd;
}

// Checks that along each path the semicubes at even positions form an
// ascending chain: S(2k) is a subset of S(2k+2).
inline bool has_superset_chains(const PathDecomposition& pd,
                                const SemicubeFamily& fam) {
  for (const auto& path : pd.paths)
    for (std::size_t j = 0; j + 2 < path.size(); j += 2)
      if (!fam[path[j]].is_subset_of(fam[path[j + 2]])) return false;
  return true;
}

// lambda_i(v) is the unique x in [0, (len_i + 1) / 2] with v in
// S(2x - 1) & S(2x) along path i, where positions -1 and len_i + 1 stand for
// the whole vertex set.
inline LatticeEmbedding coordinates(const PathDecomposition& pd,
                                    const SemicubeFamily& fam) {
  const std::size_t n = fam.vertex_count();
  const std::size_t d = pd.dimension();
  std::vector<std::vector<Coordinate>> coords(n, std::vector<Coordinate>(d, 0));
  for (std::size_t i = 0; i < d; ++i) {
    const auto& path = pd.paths[i];
    const std::size_t len = path.size() - 1;
    const std::size_t top = (len + 1) / 2;
    for (Vertex v = 0; v < n; ++v) {
      // in(j) for j in [-1, len + 1], shifted by one.
      auto in = [&](std::size_t shifted) {
        return shifted == 0 || shifted == len + 2 ||
               fam[path[shifted - 1]].test(v);
      };
      std::size_t hits = 0;
      std::size_t found = 0;
      for (std::size_t x = 0; x <= top; ++x) {
        if (in(2 * x) && in(2 * x + 1)) {
          ++hits;
          found = x;
        }
      }
      if (hits == 0)
        throw Error(ErrorKind::NoCoordinate, "vertex " + std::to_string(v) +
                                                 " on axis " + std::to_string(i));
      if (hits > 1)
        throw Error(ErrorKind::NonUniqueCoordinate,
                    "vertex " + std::to_string(v) + " on axis " +
                        std::to_string(i));
      coords[v][i] = static_cast<Coordinate>(found);
    }
  }
  LatticeEmbedding emb(d, std::move(coords));
  for (std::size_t i = 0; i < d; ++i)
    if (emb.lower[i] != 0 || emb.upper[i] < 1)
      throw Error(ErrorKind::NoCoordinate,
                  "axis " + std::to_string(i) + " is not normalized");
  return emb;
}

// All-pairs check that L1 distance equals graph distance; O(n^2 d).
inline void verify_isometry(const Graph& g, const DistanceMatrix& dm,
                            const LatticeEmbedding& emb) {
  const std::size_t n = g.vertex_count();
  if (emb.vertex_count() != n)
    throw Error(ErrorKind::IsometryViolation,
                "embedding covers " + std::to_string(emb.vertex_count()) +
                    " vertices, graph has " + std::to_string(n));
  for (Vertex u = 0; u < n; ++u) {
    const auto du = dm.row(u);
    for (Vertex v = u + 1; v < n; ++v) {
      const std::size_t l1 = emb.l1(u, v);
      if (l1 != du[v])
        throw Error(ErrorKind::IsometryViolation,
                    "pair (" + std::to_string(u) + ", " + std::to_string(v) +
                        "): L1 " + std::to_string(l1) + " != distance " +
                        std::to_string(du[v]),
                    Violation{u, v, l1, du[v]});
    }
  }
}

// Threshold construction: bit (offset_i + gamma - lower_i) of mu(v) is set
// iff lambda_i(v) > gamma, for lower_i <= gamma < upper_i. The class edge
// lists of the returned labeling are left empty.
inline HypercubeLabeling hypercube_from_embedding(const LatticeEmbedding& emb) {
  HypercubeLabeling lab;
  for (std::size_t i = 0; i < emb.dimension; ++i)
    lab.tau += static_cast<std::size_t>(emb.upper[i] - emb.lower[i]);
  lab.labels.assign(emb.vertex_count(), DynamicBitset(lab.tau));
  std::size_t offset = 0;
  for (std::size_t i = 0; i < emb.dimension; ++i) {
    for (Coordinate gamma = emb.lower[i]; gamma < emb.upper[i]; ++gamma) {
      const auto j = offset + static_cast<std::size_t>(gamma - emb.lower[i]);
      for (Vertex v = 0; v < emb.vertex_count(); ++v)
        if (emb.coords[v][i] > gamma) lab.labels[v].set(j);
    }
    offset += static_cast<std::size_t>(emb.upper[i] - emb.lower[i]);
  }
  lab.classes.resize(lab.tau);
  return lab;
}

// For each axis i and each interior threshold lower_i < gamma < upper_i,
// pairs the semicube {v : lambda_i(v) > gamma - 1} with {v : lambda_i(v) <=
// gamma}. Both are looked up in `fam` by set equality.
inline Matching matching_from_embedding(const LatticeEmbedding& emb,
                                        const SemicubeFamily& fam) {
  if (emb.vertex_count() != fam.vertex_count())
    throw Error(ErrorKind::SemicubeLookupFailed,
                "embedding and family cover different vertex sets");
  std::map<std::vector<DynamicBitset::Word>, SemicubeId> index;
  for (SemicubeId x = 0; x < fam.size(); ++x) index.emplace(fam[x].words(), x);
  auto lookup = [&](const DynamicBitset& s, std::size_t axis,
                    Coordinate gamma) {
    const auto it = index.find(s.words());
    if (it == index.end())
      throw Error(ErrorKind::SemicubeLookupFailed,
                  "threshold " + std::to_string(gamma) + " on axis " +
                      std::to_string(axis) + " is not a semicube");
    return it->second;
  };
  Matching m(fam.size());
  const std::size_t n = emb.vertex_count();
  for (std::size_t i = 0; i < emb.dimension; ++i) {
    for (Coordinate gamma = emb.lower[i] + 1; gamma < emb.upper[i]; ++gamma) {
      DynamicBitset above(n), below(n);
      for (Vertex v = 0; v < n; ++v) {
        if (emb.coords[v][i] > gamma - 1) above.set(v);
        if (emb.coords[v][i] <= gamma) below.set(v);
      }
      const SemicubeId a = lookup(above, i, gamma);
      const SemicubeId b = lookup(below, i, gamma);
      if (m.is_matched(a) || m.is_matched(b))
        throw Error(ErrorKind::NotAMatching,
                    "semicube reused at threshold " + std::to_string(gamma));
      m.match(a, b);
    }
  }
  return m;
}

}  // namespace latdim
