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

// latdim: lattice dimension and minimum-dimension L1 lattice embeddings of
// partial cubes.
//
// Exit codes: 0 success, 1 usage or I/O error, 2 input is not a partial cube
// (NotBipartite, Disconnected, NotPartialCube), 3 isometry violation.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "latdim/latdim.hpp"

namespace {

using namespace latdim;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitNotPartialCube = 2;
constexpr int kExitIsometry = 3;

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotBipartite:
    case ErrorKind::Disconnected:
    case ErrorKind::NotPartialCube:
    case ErrorKind::InconsistentClass:
      return kExitNotPartialCube;
    case ErrorKind::IsometryViolation:
      return kExitIsometry;
    default:
      return kExitUsage;
  }
}

// Thrown for I/O failures; maps to exit 1.
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write '" + path + "'");
  out << text;
}

Graph load_graph(const std::string& path, std::size_t max_n) {
  std::vector<std::string> warnings;
  Graph g = parse_edge_list(read_file(path), &warnings);
  for (const auto& w : warnings) std::cerr << "warning: " << w << '\n';
  if (g.vertex_count() > max_n)
    throw Error(ErrorKind::TooLarge, std::to_string(g.vertex_count()) +
                                         " vertices exceeds --max-n " +
                                         std::to_string(max_n));
  return g;
}

std::vector<std::size_t> parse_size_list(const std::string& text) {
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t pos = 0;
    const auto value = std::stoull(item, &pos);
    if (pos != item.size()) throw std::invalid_argument("bad size '" + item + "'");
    out.push_back(static_cast<std::size_t>(value));
  }
  return out;
}

std::size_t param(const std::vector<std::string>& args, std::size_t i,
                  const std::string& family) {
  if (i >= args.size())
    throw std::invalid_argument(family + ": missing parameter " +
                                std::to_string(i + 1));
  std::size_t pos = 0;
  const auto value = std::stoull(args[i], &pos);
  if (pos != args[i].size())
    throw std::invalid_argument(family + ": bad parameter '" + args[i] + "'");
  return static_cast<std::size_t>(value);
}

Graph make_graph(const std::string& family, const std::vector<std::string>& args,
               std::uint64_t seed) {
  auto p = [&](std::size_t i) { return param(args, i, family); };
  auto exact = [&](std::size_t count) {
    if (args.size() != count)
      throw std::invalid_argument(family + " takes " + std::to_string(count) +
                                  " parameter(s)");
  };
  if (family == "path") return exact(1), gen::path(p(0));
  if (family == "cycle") return exact(1), gen::cycle(p(0));
  if (family == "hypercube") return exact(1), gen::hypercube(p(0));
  if (family == "grid") return exact(2), gen::grid(p(0), p(1));
  if (family == "star") return exact(1), gen::star(p(0));
  if (family == "spider") return exact(2), gen::spider(p(0), p(1));
  if (family == "complete") return exact(1), gen::complete(p(0));
  if (family == "complete-bipartite")
    return exact(2), gen::complete_bipartite(p(0), p(1));
  if (family == "petersen") return exact(0), gen::petersen();
  if (family == "random-tree") {
    if (args.size() == 2) return gen::random_tree(p(0), p(1));
    return exact(1), gen::random_tree(p(0), seed);
  }
  if (family == "product") {
    // Factors are written name:arg[,arg...], e.g. path:3 cycle:6 grid:2,3.
    if (args.empty()) throw std::invalid_argument("product needs factors");
    Graph acc;
    for (std::size_t i = 0; i < args.size(); ++i) {
      const auto colon = args[i].find(':');
      const std::string name = args[i].substr(0, colon);
      std::vector<std::string> sub;
      if (colon != std::string::npos) {
        std::stringstream ss(args[i].substr(colon + 1));
        std::string item;
        while (std::getline(ss, item, ',')) sub.push_back(item);
      }
      if (name == "product") throw std::invalid_argument("nested product");
      Graph factor = make_graph(name, sub, seed);
      acc = i == 0 ? std::move(factor) : gen::product(acc, factor);
    }
    return acc;
  }
  throw std::invalid_argument("unknown family '" + family + "'");
}

std::string fmt_ms(double ms) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", ms);
  return buf;
}

std::string dominant_stage(const StageTimings& t) {
  std::pair<double, const char*> stages[] = {
      {t.recognition, "recognition"},
      {t.semicube_graph, "sc-graph"},
      {t.matching, "matching"},
      {t.coordinates, "coordinates"},
      {t.verification, "verification"},
  };
  const auto* best = &stages[0];
  for (const auto& s : stages)
    if (s.first > best->first) best = &s;
  return best->second;
}

struct Options {
  std::string input;
  std::string embedding;
  std::string out;
  std::string dot;
  std::string format = "text";
  bool project = false;
  std::uint64_t seed = 1;
  std::size_t max_n = 20000;
  std::string family;
  std::vector<std::string> params;
  std::string sizes;
};

int cmd_embed(const Options& o) {
  const Graph g = load_graph(o.input, o.max_n);
  const PipelineResult r = run_pipeline(g);
  const RunReport rep = make_report(g, r);
  std::string text;
  if (o.format == "json") {
    text = embedding_to_json(rep, r.embedding).dump(2) + "\n";
  } else {
    text = "# n=" + std::to_string(rep.n) + " tau=" + std::to_string(rep.tau) +
           " matching_size=" + std::to_string(rep.matching_size) +
           " dimension=" + std::to_string(rep.dimension) + "\n" +
           write_embedding_text(r.embedding);
  }
  write_output(o.out, text);
  if (!o.dot.empty()) write_output(o.dot, export_dot(r.semicube_graph));
  std::cerr << "dimension " << rep.dimension << '\n';
  return kExitOk;
}

int cmd_render(const Options& o) {
  const Graph g = load_graph(o.input, o.max_n);
  const LatticeEmbedding emb = embed(g);
  write_output(o.out, render_svg(g, emb, o.project));
  return kExitOk;
}

int cmd_verify(const Options& o) {
  const Graph g = load_graph(o.input, o.max_n);
  const LatticeEmbedding emb = read_embedding_text(read_file(o.embedding));
  if (emb.vertex_count() != g.vertex_count()) {
    std::cerr << "error: MalformedLine: embedding lists " << emb.vertex_count()
              << " vertices, graph has " << g.vertex_count() << '\n';
    return kExitUsage;
  }
  verify_isometry(g, all_pairs_distances(g), emb);
  std::cout << "ok: isometric embedding into Z^" << emb.dimension << '\n';
  return kExitOk;
}

int cmd_gen(const Options& o) {
  write_output(o.out, render_edge_list(make_graph(o.family, o.params, o.seed)));
  return kExitOk;
}

int cmd_bench(const Options& o) {
  const auto sizes = parse_size_list(o.sizes);
  std::ostringstream out;
  out << "family\tsize\tn\tm\ttau\tmatching\tdimension\trecognition_ms\t"
         "scgraph_ms\tmatching_ms\tcoordinates_ms\tverification_ms\ttotal_ms\t"
         "dominant\n";
  for (std::size_t s : sizes) {
    Graph g;
    if (o.family == "grid") g = gen::grid(s, s);
    else if (o.family == "tree") g = gen::random_tree(s, o.seed + s);
    else g = make_graph(o.family, {std::to_string(s)}, o.seed);
    const PipelineResult r = run_pipeline(g);
    const RunReport rep = make_report(g, r);
    const auto& t = rep.timings;
    out << o.family << '\t' << s << '\t' << rep.n << '\t' << rep.m << '\t'
        << rep.tau << '\t' << rep.matching_size << '\t' << rep.dimension << '\t'
        << fmt_ms(t.recognition) << '\t' << fmt_ms(t.semicube_graph) << '\t'
        << fmt_ms(t.matching) << '\t' << fmt_ms(t.coordinates) << '\t'
        << fmt_ms(t.verification) << '\t' << fmt_ms(t.total()) << '\t'
        << dominant_stage(t) << '\n';
  }
  write_output(o.out, out.str());
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lattice dimension and L1 lattice embeddings of partial cubes"};
  app.require_subcommand(1);
  Options o;

  auto* embed_cmd = app.add_subcommand("embed", "Compute a minimum-dimension lattice embedding");
  embed_cmd->add_option("input", o.input, "Edge-list file")->required();
  embed_cmd->add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}));
  embed_cmd->add_option("--out", o.out, "Output path (default stdout)");
  embed_cmd->add_option("--dot", o.dot, "Also write the semicube graph as DOT");
  embed_cmd->add_option("--max-n", o.max_n, "Refuse graphs with more vertices");

  auto* render_cmd = app.add_subcommand("render", "Draw an embedding of dimension <= 3 as SVG");
  render_cmd->add_option("input", o.input, "Edge-list file")->required();
  render_cmd->add_option("--out", o.out, "SVG path (default stdout)");
  render_cmd->add_flag("--project", o.project, "Draw only the first three axes");
  render_cmd->add_option("--max-n", o.max_n, "Refuse graphs with more vertices");

  auto* verify_cmd = app.add_subcommand("verify", "Check that an embedding file is isometric");
  verify_cmd->add_option("graph", o.input, "Edge-list file")->required();
  verify_cmd->add_option("embedding", o.embedding, "Coordinate file")->required();
  verify_cmd->add_option("--max-n", o.max_n, "Refuse graphs with more vertices");

  auto* gen_cmd = app.add_subcommand("gen", "Print a generated graph as an edge list");
  gen_cmd->add_option("family", o.family,
                      "path|cycle|hypercube|grid|random-tree|star|spider|"
                      "complete|complete-bipartite|petersen|product")
      ->required();
  gen_cmd->add_option("params", o.params, "Family parameters");
  gen_cmd->add_option("--seed", o.seed, "Seed for random families");
  gen_cmd->add_option("--out", o.out, "Output path (default stdout)");

  auto* bench_cmd = app.add_subcommand("bench", "Time each pipeline stage over a size sweep");
  bench_cmd->add_option("--family", o.family, "grid (s x s), tree (random, n = s), or any one-parameter gen family")
      ->required();
  bench_cmd->add_option("--sizes", o.sizes, "Comma-separated sizes")->required();
  bench_cmd->add_option("--seed", o.seed, "Base seed for random trees");
  bench_cmd->add_option("--out", o.out, "Output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (embed_cmd->parsed()) return cmd_embed(o);
    if (render_cmd->parsed()) return cmd_render(o);
    if (verify_cmd->parsed()) return cmd_verify(o);
    if (gen_cmd->parsed()) return cmd_gen(o);
    if (bench_cmd->parsed()) return cmd_bench(o);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
