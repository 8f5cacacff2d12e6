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

#include <bit>
#include <cstddef>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "latdim/error.hpp"
#include "latdim/semicube.hpp"

namespace latdim {

class Matching {
 public:
  static constexpr std::size_t kUnmatched = static_cast<std::size_t>(-1);

  Matching() = default;
  explicit Matching(std::size_t vertex_count) : mate_(vertex_count, kUnmatched) {}

  // Builds a matching from an explicit pair list. Pairs are not checked here;
  // see verify_matching.
  Matching(std::size_t vertex_count, const std::vector<Edge>& pairs)
      : Matching(vertex_count) {
    for (const auto& [a, b] : pairs) {
      mate_[a] = b;
      mate_[b] = a;
    }
  }

  std::size_t vertex_count() const noexcept { return mate_.size(); }
  std::size_t mate(std::size_t x) const noexcept { return mate_[x]; }
  bool is_matched(std::size_t x) const noexcept { return mate_[x] != kUnmatched; }
  const std::vector<std::size_t>& mates() const noexcept { return mate_; }

  void match(std::size_t a, std::size_t b) noexcept {
    mate_[a] = b;
    mate_[b] = a;
  }

  std::size_t size() const noexcept {
    std::size_t c = 0;
    for (std::size_t x = 0; x < mate_.size(); ++x)
      if (mate_[x] != kUnmatched && x < mate_[x]) ++c;
    return c;
  }

  // Matched pairs (a, b) with a < b, sorted.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (std::size_t x = 0; x < mate_.size(); ++x)
      if (mate_[x] != kUnmatched && x < mate_[x]) out.emplace_back(x, mate_[x]);
    return out;
  }

 private:
  std::vector<std::size_t> mate_;
};

namespace detail {

// Edmonds' blossom-contraction search for augmenting paths. One search per
// exposed vertex, in ascending id order. A search that fails leaves a
// Hungarian tree whose vertices can never lie on a later augmenting path, so
// they are dropped from all further searches.
class BlossomMatcher {
 public:
  static constexpr std::size_t kNone = Matching::kUnmatched;

  explicit BlossomMatcher(const SemicubeGraph& g)
      : g_(g),
        n_(g.vertex_count()),
        match_(n_, kNone),
        parent_(n_, kNone),
        base_(n_),
        outer_(n_, 0),
        in_blossom_(n_, 0),
        lca_mark_(n_, 0),
        dead_(n_, 0) {
    for (std::size_t v = 0; v < n_; ++v) base_[v] = v;
  }

  Matching run() {
    greedy();
    for (std::size_t root = 0; root < n_; ++root) {
      if (match_[root] != kNone || dead_[root]) continue;
      const std::size_t end = search(root);
      if (end == kNone) {
        for (std::size_t v : touched_) dead_[v] = 1;
      } else {
        augment(end);
      }
      reset();
    }
    Matching m(n_);
    for (std::size_t v = 0; v < n_; ++v)
      if (match_[v] != kNone && v < match_[v]) m.match(v, match_[v]);
    return m;
  }

 private:
  void greedy() {
    for (std::size_t v = 0; v < n_; ++v) {
      if (match_[v] != kNone) continue;
      for (std::size_t w : g_.neighbors(v)) {
        if (match_[w] == kNone) {
          match_[v] = w;
          match_[w] = v;
          break;
        }
      }
    }
  }

  void touch(std::size_t v) {
    if (!outer_[v] && parent_[v] == kNone) touched_.push_back(v);
  }

  void reset() {
    for (std::size_t v : touched_) {
      parent_[v] = kNone;
      base_[v] = v;
      outer_[v] = 0;
      in_blossom_[v] = 0;
    }
    touched_.clear();
    queue_.clear();
  }

  std::size_t lca(std::size_t a, std::size_t b) {
    ++stamp_;
    for (;;) {
      a = base_[a];
      lca_mark_[a] = stamp_;
      if (match_[a] == kNone) break;
      a = parent_[match_[a]];
    }
    for (;;) {
      b = base_[b];
      if (lca_mark_[b] == stamp_) return b;
      b = parent_[match_[b]];
    }
  }

  void mark_path(std::size_t v, std::size_t b, std::size_t child) {
    while (base_[v] != b) {
      in_blossom_[base_[v]] = 1;
      in_blossom_[base_[match_[v]]] = 1;
      parent_[v] = child;
      child = match_[v];
      v = parent_[match_[v]];
    }
  }

  void add_outer(std::size_t v) {
    touch(v);
    outer_[v] = 1;
    queue_.push_back(v);
  }

  std::size_t search(std::size_t root) {
    add_outer(root);
    for (std::size_t head = 0; head < queue_.size(); ++head) {
      const std::size_t v = queue_[head];
      for (std::size_t to : g_.neighbors(v)) {
        if (dead_[to] || base_[v] == base_[to] || match_[v] == to) continue;
        if (to == root || (match_[to] != kNone && parent_[match_[to]] != kNone)) {
          const std::size_t b = lca(v, to);
          for (std::size_t u : touched_) in_blossom_[u] = 0;
          mark_path(v, b, to);
          mark_path(to, b, v);
          const std::size_t count = touched_.size();
          for (std::size_t i = 0; i < count; ++i) {
            const std::size_t u = touched_[i];
            if (in_blossom_[base_[u]]) {
              base_[u] = b;
              if (!outer_[u]) add_outer(u);
            }
          }
        } else if (parent_[to] == kNone) {
          touch(to);
          parent_[to] = v;
          if (match_[to] == kNone) return to;
          add_outer(match_[to]);
        }
      }
    }
    return kNone;
  }

  void augment(std::size_t v) {
    while (v != kNone) {
      const std::size_t pv = parent_[v];
      const std::size_t next = match_[pv];
      match_[v] = pv;
      match_[pv] = v;
      v = next;
    }
  }

  const SemicubeGraph& g_;
  std::size_t n_;
  std::vector<std::size_t> match_;
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> base_;
  std::vector<char> outer_;
  std::vector<char> in_blossom_;
  std::vector<std::uint64_t> lca_mark_;
  std::vector<char> dead_;
  std::vector<std::size_t> touched_;
  std::vector<std::size_t> queue_;
  std::uint64_t stamp_ = 0;
};

}  // namespace detail

// Maximum-cardinality matching in a general graph. Deterministic: greedy
// initial matching in ascending id order, then augmenting searches from
// exposed vertices in ascending id order.
inline Matching maximum_matching(const SemicubeGraph& sg) {
  return detail::BlossomMatcher(sg).run();
}

inline constexpr std::size_t kBruteForceMatchingMaxVertices = 24;

// Exact maximum matching size by exhaustive branching with memoization on
// the set of remaining vertices. Refuses graphs above 24 vertices.
inline std::size_t brute_force_matching_size(const SemicubeGraph& sg) {
  const std::size_t n = sg.vertex_count();
  if (n > kBruteForceMatchingMaxVertices)
    throw Error(ErrorKind::TooLarge, std::to_string(n) +
                                         " vertices exceeds brute-force limit " +
                                         std::to_string(kBruteForceMatchingMaxVertices));
  std::vector<std::uint32_t> nbr(n, 0);
  for (const auto& [a, b] : sg.edges()) {
    nbr[a] |= std::uint32_t{1} << b;
    nbr[b] |= std::uint32_t{1} << a;
  }
  std::unordered_map<std::uint32_t, std::size_t> memo;
  auto best = [&](auto&& self, std::uint32_t remaining) -> std::size_t {
    // Drop vertices with no remaining neighbour; they cannot be matched.
    std::uint32_t live = 0;
    for (std::uint32_t r = remaining; r != 0; r &= r - 1) {
      const auto v = static_cast<std::size_t>(std::countr_zero(r));
      if (nbr[v] & remaining) live |= std::uint32_t{1} << v;
    }
    if (live == 0) return 0;
    if (auto it = memo.find(live); it != memo.end()) return it->second;
    const std::size_t bound = static_cast<std::size_t>(std::popcount(live)) / 2;
    const auto v = static_cast<std::size_t>(std::countr_zero(live));
    const std::uint32_t without_v = live & ~(std::uint32_t{1} << v);
    std::size_t result = self(self, without_v);
    for (std::uint32_t cand = nbr[v] & live; cand != 0 && result < bound;
         cand &= cand - 1) {
      const auto w = static_cast<std::size_t>(std::countr_zero(cand));
      result = std::max(result,
                        1 + self(self, without_v & ~(std::uint32_t{1} << w)));
    }
    memo.emplace(live, result);
    return result;
  };
  const std::uint32_t all =
      n == 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << n) - 1;
  return best(best, all);
}

// Checks that m is a matching of sg, then that no larger matching exists by
// comparing against a fresh maximum_matching run.
inline void verify_matching(const SemicubeGraph& sg, const Matching& m) {
  if (m.vertex_count() != sg.vertex_count())
    throw Error(ErrorKind::NotAMatching, "vertex count mismatch");
  for (std::size_t x = 0; x < m.vertex_count(); ++x) {
    const std::size_t y = m.mate(x);
    if (y == Matching::kUnmatched) continue;
    if (y >= m.vertex_count() || m.mate(y) != x)
      throw Error(ErrorKind::NotAMatching,
                  "vertex " + std::to_string(x) + " has an asymmetric partner");
    if (!sg.has_edge(x, y))
      throw Error(ErrorKind::NotAMatching, "pair " + std::to_string(x) + " " +
                                               std::to_string(y) +
                                               " is not an edge");
  }
  const std::size_t best = maximum_matching(sg).size();
  if (m.size() < best)
    throw Error(ErrorKind::NotMaximum, "size " + std::to_string(m.size()) +
                                           " < maximum " + std::to_string(best));
}

// Validates a raw pair list (possibly overlapping) and converts it.
inline Matching matching_from_pairs(const SemicubeGraph& sg,
                                    const std::vector<Edge>& pairs) {
  Matching m(sg.vertex_count());
  for (const auto& [a, b] : pairs) {
    if (a >= sg.vertex_count() || b >= sg.vertex_count() || a == b)
      throw Error(ErrorKind::NotAMatching, "pair out of range");
    if (m.is_matched(a) || m.is_matched(b))
      throw Error(ErrorKind::NotAMatching, "pairs " + std::to_string(a) + " " +
                                               std::to_string(b) +
                                               " share a vertex");
    m.match(a, b);
  }
  return m;
}

}  // namespace latdim
