// Copyright 2026 The Gapmatch Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// gapmatch: dictionary statistics, streaming matching, triangle queries and
// counter benchmarks.
//
// Exit codes: 0 success, 1 parse or usage error, 2 I/O error.

#include <fcntl.h>
#include <unistd.h>

#include <algorithm>
#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gapmatch/dictionary.h"
#include "gapmatch/engine.h"
#include "gapmatch/families.h"
#include "gapmatch/triangles.h"
#include "json.hpp"

namespace {

using gapmatch::EngineConfig;

constexpr int kParseError = 1;
constexpr int kIoError = 2;

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path + ": " + std::strerror(errno));
  return in;
}

std::vector<gapmatch::GappedPattern> load_dictionary(const std::string& path) {
  auto in = open_input(path);
  return gapmatch::parse_dictionary(in);
}

void write_all(std::FILE* out, const std::string& s) {
  if (std::fwrite(s.data(), 1, s.size(), out) != s.size()) throw IoError("write failed");
}

// ---------------------------------------------------------------------------

int cmd_stats(const std::string& dict_path) {
  auto dict = gapmatch::compile(load_dictionary(dict_path));
  const auto& s = dict->stats;
  const auto& g = dict->graph;
  const std::int64_t delta = dict->degeneracy.degeneracy;
  // Suggest the threshold engine once delta^2 * lsc >= d, i.e. delta >= sqrt(d / lsc).
  const bool dense = s.d > 0 && delta * delta * std::max<std::int64_t>(s.lsc, 1) >= s.d;
  nlohmann::ordered_json j;
  j["d"] = s.d;
  j["gapless"] = s.gapless;
  j["total_len"] = s.total_len;
  j["lsc"] = s.lsc;
  j["M"] = s.max_second;
  j["alpha_star"] = s.alpha_star;
  j["beta_star"] = s.beta_star;
  j["regime"] = std::string(gapmatch::regime_name(s.regime));
  j["left_vertices"] = g.num_left;
  j["right_vertices"] = g.num_right;
  j["degeneracy"] = delta;
  j["theta"] = dict->split.threshold;
  j["heavy_left"] = dict->split.heavy_left;
  j["heavy_right"] = dict->split.heavy_right;
  j["automaton_states"] = dict->automaton.state_count();
  j["dense_goto"] = dict->automaton.dense();
  j["suggested_engine"] = dense ? "threshold" : "orientation";
  write_all(stdout, j.dump(2) + "\n");
  return 0;
}

// ---------------------------------------------------------------------------

struct MatchOptions {
  std::string dict_path;
  std::string text_path = "-";
  std::string engine = "orientation";
  bool witnesses = false;
  std::string counters_path;
  bool online_flush = false;
};

int cmd_match(const MatchOptions& o) {
  EngineConfig config;
  config.kind = gapmatch::parse_engine_kind(o.engine);
  config.mode = o.witnesses ? gapmatch::ReportMode::kWitness : gapmatch::ReportMode::kDedup;
  auto dict = gapmatch::compile(load_dictionary(o.dict_path));
  gapmatch::Matcher matcher(dict, config);

  int fd = STDIN_FILENO;
  if (o.text_path != "-") {
    fd = ::open(o.text_path.c_str(), O_RDONLY);
    if (fd < 0) throw IoError("cannot open " + o.text_path + ": " + std::strerror(errno));
  }
  std::vector<std::uint64_t> works;
  std::uint64_t total_output = 0;
  std::int64_t max_space = 0;
  std::string line;
  char buffer[1 << 16];
  while (true) {
    ssize_t got = ::read(fd, buffer, sizeof buffer);
    if (got < 0) {
      if (errno == EINTR) continue;
      throw IoError(std::string("read failed: ") + std::strerror(errno));
    }
    if (got == 0) break;
    for (ssize_t k = 0; k < got; ++k) {
      auto out = matcher.step(static_cast<unsigned char>(buffer[k]));
      if (!o.counters_path.empty()) {
        works.push_back(matcher.last_work());
        if (matcher.position() % 64 == 0) max_space = std::max(max_space, matcher.space_units());
      }
      total_output += out.size();
      for (const auto& occ : out) {
        line = gapmatch::format_occurrence(occ);
        line += '\n';
        write_all(stdout, line);
      }
      if (o.online_flush && !out.empty()) std::fflush(stdout);
    }
  }
  if (fd != STDIN_FILENO) ::close(fd);
  std::fflush(stdout);

  if (!o.counters_path.empty()) {
    max_space = std::max(max_space, matcher.space_units());
    nlohmann::ordered_json j;
    j["engine"] = o.engine;
    j["characters"] = matcher.position();
    std::uint64_t total = 0;
    for (auto w : works) total += w;
    j["work"] = {{"p50", gapmatch::percentile(works, 0.50)},
                 {"p90", gapmatch::percentile(works, 0.90)},
                 {"p99", gapmatch::percentile(works, 0.99)},
                 {"max", gapmatch::percentile(works, 1.0)},
                 {"total", total}};
    j["occurrences"] = total_output;
    j["space_max"] = max_space;
    std::ofstream out(o.counters_path);
    if (!out) throw IoError("cannot write " + o.counters_path);
    out << j.dump(2) << '\n';
  }
  return 0;
}

// ---------------------------------------------------------------------------

int cmd_triangles(const std::string& graph_path, std::int64_t vertex, bool all,
                  std::int64_t bounded_alpha) {
  auto in = open_input(graph_path);
  gapmatch::QueryGraph graph = [&] {
    try {
      return gapmatch::QueryGraph::parse(in);
    } catch (const std::invalid_argument& e) {
      throw gapmatch::ParseError(0, e.what());
    }
  }();
  std::vector<gapmatch::Triangle> result;
  auto query = [&](std::int32_t u) {
    if (bounded_alpha >= 0) {
      return gapmatch::vertex_triangles_bounded(graph, u, bounded_alpha);
    }
    return gapmatch::vertex_triangles(graph, u);
  };
  if (all) {
    if (bounded_alpha >= 0) {
      gapmatch::BoundedTriangleIndex index(graph);
      for (std::int32_t u = 0; u < graph.num_vertices(); ++u) {
        auto t = index.vertex_triangles(u, bounded_alpha);
        result.insert(result.end(), t.begin(), t.end());
      }
      std::sort(result.begin(), result.end());
      result.erase(std::unique(result.begin(), result.end()), result.end());
    } else {
      result = gapmatch::all_triangles(graph);
    }
  } else {
    if (vertex < 0 || vertex >= graph.num_vertices()) {
      throw std::out_of_range("vertex " + std::to_string(vertex) + " is not in the graph");
    }
    result = query(static_cast<std::int32_t>(vertex));
  }
  std::string text;
  for (const auto& t : result) {
    text += std::to_string(t[0]) + ' ' + std::to_string(t[1]) + ' ' + std::to_string(t[2]) + '\n';
  }
  write_all(stdout, text);
  return 0;
}

// ---------------------------------------------------------------------------

struct BenchOptions {
  std::vector<std::string> families{"orientation", "threshold"};
  std::uint64_t seed = 1;
  std::size_t length = 20000;
  bool no_timing = false;
  std::string out_path;
};

int cmd_bench(const BenchOptions& o) {
  std::ostringstream csv;
  csv << "family,size,delta,lsc,work_p50,work_p99,throughput\n";
  auto row = [&](const gapmatch::Family& f, EngineConfig config) {
    auto m = gapmatch::measure(f, config);
    csv << f.name << ',' << f.size << ',' << m.delta << ',' << m.lsc << ',' << m.work_p50 << ','
        << m.work_p99 << ',';
    if (o.no_timing || m.seconds <= 0) {
      csv << 0;
    } else {
      csv << std::llround(static_cast<double>(m.steps) / m.seconds);
    }
    csv << '\n';
  };
  EngineConfig orientation;
  EngineConfig threshold;
  threshold.kind = gapmatch::EngineKind::kThreshold;
  for (const auto& name : o.families) {
    if (name.empty()) continue;
    if (name == "orientation") {
      for (int delta : {1, 2, 4, 8}) row(gapmatch::orientation_family(delta, o.seed, o.length), orientation);
    } else if (name == "threshold") {
      for (int d : {16, 64, 256}) row(gapmatch::threshold_family(d, o.seed, o.length), threshold);
    } else if (name == "threshold-nonuniform") {
      for (int d : {16, 64, 256}) {
        row(gapmatch::threshold_nonuniform_family(d, 4, o.seed, o.length), threshold);
      }
    } else {
      throw CLI::ValidationError("--families", "unknown family '" + name + "'");
    }
  }
  if (o.out_path.empty()) {
    write_all(stdout, csv.str());
  } else {
    std::ofstream out(o.out_path);
    if (!out) throw IoError("cannot write " + o.out_path);
    out << csv.str();
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Streaming dictionary matching with one gap"};
  app.require_subcommand(1);

  std::string stats_dict;
  auto* stats = app.add_subcommand("stats", "Print dictionary statistics as JSON");
  stats->add_option("DICT", stats_dict, "Dictionary file")->required();

  MatchOptions match_opts;
  auto* match = app.add_subcommand("match", "Stream a text and print occurrences");
  match->add_option("DICT", match_opts.dict_path, "Dictionary file")->required();
  match->add_option("TEXT", match_opts.text_path, "Text file, or - for standard input");
  match->add_option("--engine", match_opts.engine, "orientation or threshold")
      ->check(CLI::IsMember({"orientation", "threshold"}));
  match->add_flag("--witnesses", match_opts.witnesses, "Print one line per witness");
  match->add_option("--counters", match_opts.counters_path, "Write work counters as JSON");
  match->add_flag("--online-flush", match_opts.online_flush,
                  "Flush each position's output before reading on");

  std::string graph_path;
  std::int64_t vertex = -1;
  bool all = false;
  std::int64_t bounded_alpha = -1;
  auto* triangles = app.add_subcommand("triangles", "List triangles through a vertex");
  triangles->add_option("GRAPH", graph_path, "Edge list file")->required();
  auto* vertex_opt = triangles->add_option("--vertex", vertex, "Query vertex");
  auto* all_opt = triangles->add_flag("--all", all, "Every triangle of the graph");
  vertex_opt->excludes(all_opt);
  triangles->add_option("--bounded", bounded_alpha, "Use the bounded pipeline with this padding")
      ->check(CLI::NonNegativeNumber);

  BenchOptions bench_opts;
  auto* bench = app.add_subcommand("bench", "Run the scaling families and print CSV");
  bench->add_option("--families", bench_opts.families,
                    "Comma-separated list: orientation, threshold, threshold-nonuniform")
      ->delimiter(',');
  bench->add_option("--seed", bench_opts.seed, "Random seed");
  bench->add_option("--length", bench_opts.length, "Text length per family member");
  bench->add_flag("--no-timing", bench_opts.no_timing, "Print 0 for throughput");
  bench->add_option("--out", bench_opts.out_path, "Write CSV here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kParseError;
  }

  try {
    if (*stats) return cmd_stats(stats_dict);
    if (*match) return cmd_match(match_opts);
    if (*triangles) {
      if (!all && vertex < 0) {
        std::cerr << "triangles: one of --vertex or --all is required\n";
        return kParseError;
      }
      return cmd_triangles(graph_path, vertex, all, bounded_alpha);
    }
    if (*bench) return cmd_bench(bench_opts);
  } catch (const IoError& e) {
    std::cerr << "gapmatch: " << e.what() << '\n';
    return kIoError;
  } catch (const gapmatch::ParseError& e) {
    std::cerr << "gapmatch: " << e.what() << '\n';
    return kParseError;
  } catch (const CLI::Error& e) {
    std::cerr << "gapmatch: " << e.what() << '\n';
    return kParseError;
  } catch (const std::exception& e) {
    std::cerr << "gapmatch: " << e.what() << '\n';
    return kParseError;
  }
  return 0;
}
