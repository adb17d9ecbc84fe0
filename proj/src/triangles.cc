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

#include "gapmatch/triangles.h"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>

namespace gapmatch {
namespace {

void sort_unique(std::vector<Triangle>& t) {
  std::sort(t.begin(), t.end());
  t.erase(std::unique(t.begin(), t.end()), t.end());
}

}  // namespace

Triangle make_triangle(std::int32_t a, std::int32_t b, std::int32_t c) {
  Triangle t{a, b, c};
  std::sort(t.begin(), t.end());
  return t;
}

QueryGraph::QueryGraph(std::int32_t num_vertices,
                       std::vector<std::pair<std::int32_t, std::int32_t>> edges)
    : n_(num_vertices), edges_(std::move(edges)), adj_(num_vertices) {
  if (n_ < 0) throw std::invalid_argument("negative vertex count");
  std::set<std::pair<std::int32_t, std::int32_t>> seen;
  for (auto [a, b] : edges_) {
    check_vertex(a);
    check_vertex(b);
    if (a == b) throw std::invalid_argument("self-loop at vertex " + std::to_string(a));
    if (!seen.emplace(std::min(a, b), std::max(a, b)).second) {
      throw std::invalid_argument("duplicate edge " + std::to_string(a) + " " + std::to_string(b));
    }
    adj_[a].push_back(b);
    adj_[b].push_back(a);
  }
}

QueryGraph QueryGraph::parse(std::istream& in) {
  std::vector<std::pair<std::int32_t, std::int32_t>> edges;
  std::int32_t n = 0;
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    auto start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    std::istringstream row(line);
    long long a = -1, b = -1;
    std::string rest;
    if (!(row >> a >> b) || (row >> rest) || a < 0 || b < 0 || a > INT32_MAX - 1 ||
        b > INT32_MAX - 1) {
      throw std::invalid_argument("line " + std::to_string(line_number) +
                                  ": expected two non-negative vertex ids");
    }
    edges.emplace_back(static_cast<std::int32_t>(a), static_cast<std::int32_t>(b));
    n = std::max(n, static_cast<std::int32_t>(std::max(a, b)) + 1);
  }
  return QueryGraph(n, std::move(edges));
}

void QueryGraph::check_vertex(std::int32_t u) const {
  if (u < 0 || u >= n_) throw std::out_of_range("unknown vertex " + std::to_string(u));
}

// ---------------------------------------------------------------------------

namespace {

std::shared_ptr<const IsgGraph> both_directions(const QueryGraph& g) {
  std::vector<IsgEdge> edges;
  edges.reserve(2 * g.edges().size());
  for (auto [a, b] : g.edges()) {
    edges.push_back({a, b});
    edges.push_back({b, a});
  }
  return std::make_shared<const IsgGraph>(g.num_vertices(), std::move(edges));
}

std::shared_ptr<const IsgGraph> tripartite(const QueryGraph& g) {
  const std::int32_t n = g.num_vertices();
  std::vector<IsgEdge> edges;
  edges.reserve(6 * g.edges().size());
  for (auto [a, b] : g.edges()) {
    for (auto [x, y] : {std::pair{a, b}, std::pair{b, a}}) {
      edges.push_back({x, n + y});          // V1 -> V2
      edges.push_back({x, 2 * n + y});      // V1 -> V3
      edges.push_back({n + x, 2 * n + y});  // V2 -> V3
    }
  }
  // Vertex 3n is the dummy and has no edges.
  return std::make_shared<const IsgGraph>(3 * n + 1, std::move(edges));
}

}  // namespace

TriangleIndex::TriangleIndex(const QueryGraph& graph)
    : graph_(&graph), isg_graph_(both_directions(graph)), engine_(isg_graph_) {}

std::vector<Triangle> TriangleIndex::vertex_triangles(std::int32_t u) {
  graph_->check_vertex(u);
  std::vector<Triangle> out;
  last_work_ = 0;
  const auto& edges = isg_graph_->edges();
  for (std::int32_t x : graph_->neighbors(u)) {
    for (std::int32_t e : engine_.step(x)) out.push_back(make_triangle(u, edges[e].tail, x));
    last_work_ += engine_.last_work();
  }
  engine_.reset();
  sort_unique(out);
  return out;
}

BoundedTriangleIndex::BoundedTriangleIndex(const QueryGraph& graph)
    : graph_(&graph), tripartite_(tripartite(graph)) {}

std::vector<Triangle> BoundedTriangleIndex::vertex_triangles(std::int32_t u,
                                                             std::int64_t alpha) {
  graph_->check_vertex(u);
  if (alpha < 0) throw std::invalid_argument("negative padding");
  const std::int32_t n = graph_->num_vertices();
  const auto& nbrs = graph_->neighbors(u);
  UniformIsg engine(tripartite_, alpha, alpha + 2 * static_cast<std::int64_t>(nbrs.size()));
  std::vector<Triangle> out;
  last_work_ = 0;
  auto feed = [&](std::int32_t x) {
    for (const IsgReport& r : engine.step(x)) {
      const IsgEdge& e = tripartite_->edges()[r.edge];
      out.push_back(make_triangle(u, e.tail % n, e.head % n));
    }
    last_work_ += engine.last_work();
  };
  for (std::int32_t x : nbrs) feed(n + x);
  for (std::int64_t k = 0; k < alpha; ++k) feed(3 * n);
  for (std::int32_t x : nbrs) feed(2 * n + x);
  sort_unique(out);
  return out;
}

std::vector<Triangle> vertex_triangles(const QueryGraph& graph, std::int32_t u) {
  return TriangleIndex(graph).vertex_triangles(u);
}

std::vector<Triangle> vertex_triangles_bounded(const QueryGraph& graph, std::int32_t u,
                                               std::int64_t alpha) {
  return BoundedTriangleIndex(graph).vertex_triangles(u, alpha);
}

std::vector<Triangle> all_triangles(const QueryGraph& graph) {
  TriangleIndex index(graph);
  std::vector<Triangle> out;
  for (std::int32_t u = 0; u < graph.num_vertices(); ++u) {
    auto t = index.vertex_triangles(u);
    out.insert(out.end(), t.begin(), t.end());
  }
  sort_unique(out);
  return out;
}

}  // namespace gapmatch
