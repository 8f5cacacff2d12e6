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
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "latdim/error.hpp"
#include "latdim/lattice.hpp"
#include "latdim/pipeline.hpp"

namespace latdim {

// One line per vertex in id order: "v c_0 c_1 ... c_{d-1}".
inline std::string write_embedding_text(const LatticeEmbedding& emb) {
  std::ostringstream out;
  for (Vertex v = 0; v < emb.vertex_count(); ++v) {
    out << v;
    for (Coordinate c : emb.coords[v]) out << ' ' << c;
    out << '\n';
  }
  return out.str();
}

inline nlohmann::ordered_json report_to_json(const RunReport& rep) {
  nlohmann::ordered_json j;
  j["n"] = rep.n;
  j["m"] = rep.m;
  j["tau"] = rep.tau;
  j["matching_size"] = rep.matching_size;
  j["dimension"] = rep.dimension;
  j["status"] = rep.status;
  return j;
}

// {n, tau, matching_size, dimension, coordinates}; timings are omitted so the
// output is reproducible byte for byte.
inline nlohmann::ordered_json embedding_to_json(const RunReport& rep,
                                                const LatticeEmbedding& emb) {
  nlohmann::ordered_json j;
  j["n"] = rep.n;
  j["tau"] = rep.tau;
  j["matching_size"] = rep.matching_size;
  j["dimension"] = rep.dimension;
  j["coordinates"] = emb.coords;
  return j;
}

// Parses the per-vertex coordinate format. Every id 0..n-1 must appear
// exactly once and all rows must have the same length; '#' comments allowed.
inline LatticeEmbedding read_embedding_text(std::string_view text) {
  std::vector<std::vector<Coordinate>> rows;
  std::set<std::size_t> seen;
  std::size_t dim = 0;
  bool first = true;
  std::size_t line_no = 0;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos)
      line.erase(hash);
    std::istringstream fields(line);
    long long id = 0;
    if (!(fields >> id)) {
      if (detail::trim(line).empty()) continue;
      throw Error(ErrorKind::MalformedLine, "line " + std::to_string(line_no));
    }
    std::vector<Coordinate> c;
    Coordinate x = 0;
    while (fields >> x) c.push_back(x);
    if (!fields.eof() || id < 0)
      throw Error(ErrorKind::MalformedLine, "line " + std::to_string(line_no));
    if (first) {
      dim = c.size();
      first = false;
    } else if (c.size() != dim) {
      throw Error(ErrorKind::MalformedLine,
                  "line " + std::to_string(line_no) + ": expected " +
                      std::to_string(dim) + " coordinates");
    }
    const auto v = static_cast<std::size_t>(id);
    if (!seen.insert(v).second)
      throw Error(ErrorKind::MalformedLine, "vertex " + std::to_string(v) +
                                                " listed twice");
    if (rows.size() <= v) rows.resize(v + 1);
    rows[v] = std::move(c);
  }
  if (seen.empty()) throw Error(ErrorKind::EmptyInput, "no coordinates");
  if (seen.size() != rows.size())
    throw Error(ErrorKind::MalformedLine, "vertex ids are not 0.." +
                                              std::to_string(rows.size() - 1));
  return LatticeEmbedding(dim, std::move(rows));
}

}  // namespace latdim
