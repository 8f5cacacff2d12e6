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
#include <cstdio>
#include <string>
#include <utility>
#include <vector>

#include "latdim/error.hpp"
#include "latdim/graph.hpp"
#include "latdim/lattice.hpp"

namespace latdim {

struct SvgStyle {
  double unit = 60.0;      // pixels per lattice step
  double margin = 30.0;
  double radius = 5.0;
  double depth = 0.4;      // third-axis shear for the axonometric view
};

namespace detail {

inline std::string fmt2(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", x);
  return buf;
}

}  // namespace detail

// Draws the graph at its lattice coordinates. d = 1 lies on a horizontal
// line, d = 3 is sheared to (x + depth z, y + depth z). Embeddings above three
// dimensions throw DimensionTooHigh unless `project` is set, in which case
// only the first three axes are drawn.
inline std::string render_svg(const Graph& g, const LatticeEmbedding& emb,
                              bool project = false, SvgStyle style = {}) {
  const std::size_t d = emb.dimension;
  if (d > 3 && !project)
    throw Error(ErrorKind::DimensionTooHigh,
                std::to_string(d) + " axes; use --project to draw the first 3");
  const std::size_t n = emb.vertex_count();
  std::vector<std::pair<double, double>> pts(n);
  for (Vertex v = 0; v < n; ++v) {
    const auto& c = emb.coords[v];
    const double x = d > 0 ? static_cast<double>(c[0]) : 0.0;
    const double y = d > 1 ? static_cast<double>(c[1]) : 0.0;
    const double z = d > 2 ? static_cast<double>(c[2]) : 0.0;
    pts[v] = {x + style.depth * z, y + style.depth * z};
  }
  double max_x = 0, max_y = 0;
  for (const auto& [x, y] : pts) {
    max_x = std::max(max_x, x);
    max_y = std::max(max_y, y);
  }
  // SVG y grows downward; flip so the second axis points up.
  auto px = [&](double x) { return style.margin + style.unit * x; };
  auto py = [&](double y) { return style.margin + style.unit * (max_y - y); };
  const double width = 2 * style.margin + style.unit * max_x;
  const double height = 2 * style.margin + style.unit * max_y;

  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
         detail::fmt2(width) + "\" height=\"" + detail::fmt2(height) +
         "\" viewBox=\"0 0 " + detail::fmt2(width) + " " +
         detail::fmt2(height) + "\">\n";
  out += "<g stroke=\"#333\" stroke-width=\"2\">\n";
  for (const auto& [u, v] : g.edges()) {
    out += "<line x1=\"" + detail::fmt2(px(pts[u].first)) + "\" y1=\"" +
           detail::fmt2(py(pts[u].second)) + "\" x2=\"" +
           detail::fmt2(px(pts[v].first)) + "\" y2=\"" +
           detail::fmt2(py(pts[v].second)) + "\"/>\n";
  }
  out += "</g>\n<g fill=\"#d33\">\n";
  for (Vertex v = 0; v < n; ++v) {
    out += "<circle id=\"v" + std::to_string(v) + "\" cx=\"" +
           detail::fmt2(px(pts[v].first)) + "\" cy=\"" +
           detail::fmt2(py(pts[v].second)) + "\" r=\"" +
           detail::fmt2(style.radius) + "\"/>\n";
  }
  out += "</g>\n</svg>\n";
  return out;
}

}  // namespace latdim
