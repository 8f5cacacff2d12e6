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

#include <chrono>
#include <cstddef>
#include <string>
#include <utility>

#include "latdim/graph.hpp"
#include "latdim/lattice.hpp"
#include "latdim/matching.hpp"
#include "latdim/partial_cube.hpp"
#include "latdim/semicube.hpp"

namespace latdim {

// Wall-clock milliseconds per pipeline stage. `recognition` covers
// validation, all-pairs distances, the Djokovic-Winkler classes and the
// labeling check; `verification` is the final all-pairs isometry check.
struct StageTimings {
  double recognition = 0;
  double semicube_graph = 0;
  double matching = 0;
  double coordinates = 0;
  double verification = 0;

  double total() const noexcept {
    return recognition + semicube_graph + matching + coordinates + verification;
  }
};

struct PipelineResult {
  DistanceMatrix distances;
  HypercubeLabeling labeling;
  SemicubeFamily family;
  SemicubeGraph semicube_graph;
  Matching matching;
  PathDecomposition paths;
  LatticeEmbedding embedding;
  StageTimings timings;

  std::size_t tau() const noexcept { return labeling.tau; }
  std::size_t dimension() const noexcept { return embedding.dimension; }
};

namespace detail {

class StageClock {
 public:
  double lap() {
    const auto now = std::chrono::steady_clock::now();
    const double ms =
        std::chrono::duration<double, std::milli>(now - last_).count();
    last_ = now;
    return ms;
  }

 private:
  std::chrono::steady_clock::time_point last_ = std::chrono::steady_clock::now();
};

}  // namespace detail

// recognize -> semicubes -> semicube graph -> maximum matching -> paths ->
// coordinates -> isometry check. The returned dimension is the lattice
// dimension tau - |M| and the embedding is a verified witness.
inline PipelineResult run_pipeline(const Graph& g) {
  PipelineResult r;
  detail::StageClock clock;
  validate(g);
  r.distances = all_pairs_distances(g);
  r.labeling = recognize(g, r.distances);
  r.timings.recognition = clock.lap();

  r.family = semicubes(r.labeling);
  r.semicube_graph = build_semicube_graph(r.family);
  r.timings.semicube_graph = clock.lap();

  r.matching = maximum_matching(r.semicube_graph);
  r.timings.matching = clock.lap();

  r.paths = path_decomposition(r.family.size(), r.matching);
  r.embedding = coordinates(r.paths, r.family);
  r.timings.coordinates = clock.lap();

  verify_isometry(g, r.distances, r.embedding);
  r.timings.verification = clock.lap();
  return r;
}

inline LatticeEmbedding embed(const Graph& g) {
  return std::move(run_pipeline(g).embedding);
}

struct RunReport {
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t tau = 0;
  std::size_t matching_size = 0;
  std::size_t dimension = 0;
  StageTimings timings;
  std::string status = "ok";
};

inline RunReport make_report(const Graph& g, const PipelineResult& r) {
  RunReport rep;
  rep.n = g.vertex_count();
  rep.m = g.edge_count();
  rep.tau = r.tau();
  rep.matching_size = r.matching.size();
  rep.dimension = r.dimension();
  rep.timings = r.timings;
  return rep;
}

}  // namespace latdim
