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

// Vertex-triangle queries answered by streaming a vertex's neighbourhood
// through the induced-subgraph engines.
//
// Unbounded pipeline: every edge {a, b} becomes a -> b and b -> a; feeding
// the neighbours of u reports each adjacent neighbour pair once.
//
// Bounded pipeline: the graph is copied three times (V1, V2, V3) plus one
// isolated dummy vertex, and every edge yields the six edges from a lower
// copy to a higher one. The query stream is the V2 copies of N(u), alpha
// dummies, then the V3 copies of N(u), run with window [alpha, alpha + 2 deg].

#ifndef GAPMATCH_TRIANGLES_H_
#define GAPMATCH_TRIANGLES_H_

#include <array>
#include <cstdint>
#include <istream>
#include <memory>
#include <utility>
#include <vector>

#include "gapmatch/isg.h"

namespace gapmatch {

using Triangle = std::array<std::int32_t, 3>;  // sorted ascending

Triangle make_triangle(std::int32_t a, std::int32_t b, std::int32_t c);

class QueryGraph {
 public:
  // Rejects self-loops, duplicate edges and out-of-range ids.
  QueryGraph(std::int32_t num_vertices, std::vector<std::pair<std::int32_t, std::int32_t>> edges);

  // One "u v" pair per line; '#' comments and blank lines are skipped.
  // The vertex count is one more than the largest id.
  static QueryGraph parse(std::istream& in);

  std::int32_t num_vertices() const { return n_; }
  const std::vector<std::pair<std::int32_t, std::int32_t>>& edges() const { return edges_; }
  const std::vector<std::int32_t>& neighbors(std::int32_t u) const { return adj_[u]; }
  std::int32_t degree(std::int32_t u) const { return static_cast<std::int32_t>(adj_[u].size()); }
  void check_vertex(std::int32_t u) const;

 private:
  std::int32_t n_;
  std::vector<std::pair<std::int32_t, std::int32_t>> edges_;
  std::vector<std::vector<std::int32_t>> adj_;
};

// Reuses one unbounded engine across queries, resetting only what a query
// touched.
class TriangleIndex {
 public:
  explicit TriangleIndex(const QueryGraph& graph);

  std::vector<Triangle> vertex_triangles(std::int32_t u);
  std::uint64_t last_work() const { return last_work_; }
  std::int32_t degeneracy() const { return isg_graph_->degeneracy(); }

 private:
  const QueryGraph* graph_;
  std::shared_ptr<const IsgGraph> isg_graph_;
  UnboundedIsg engine_;
  std::uint64_t last_work_ = 0;
};

// Shares the tripartite graph; each query runs on its own engine because the
// window depends on deg(u).
class BoundedTriangleIndex {
 public:
  explicit BoundedTriangleIndex(const QueryGraph& graph);

  std::vector<Triangle> vertex_triangles(std::int32_t u, std::int64_t alpha);
  std::uint64_t last_work() const { return last_work_; }

 private:
  const QueryGraph* graph_;
  std::shared_ptr<const IsgGraph> tripartite_;
  std::uint64_t last_work_ = 0;
};

std::vector<Triangle> vertex_triangles(const QueryGraph& graph, std::int32_t u);
std::vector<Triangle> vertex_triangles_bounded(const QueryGraph& graph, std::int32_t u,
                                               std::int64_t alpha);

// Union of all vertex queries, each triangle once.
std::vector<Triangle> all_triangles(const QueryGraph& graph);

}  // namespace gapmatch

#endif  // GAPMATCH_TRIANGLES_H_
