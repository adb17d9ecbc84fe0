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

// The dictionary graph and its orientations.
//
// Left vertices are numbered [0, num_left), right vertices [0, num_right);
// orientation routines use the unified id space where right vertex v is
// num_left + v. An edge "assigned to" x (x responsible for it) is an out-edge
// of x in the orientation; the other endpoint is x's assigned-neighbor.

#ifndef GAPMATCH_GRAPH_H_
#define GAPMATCH_GRAPH_H_

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "gapmatch/dictionary.h"

namespace gapmatch {

struct DictEdge {
  std::int32_t left = 0;
  std::int32_t right = 0;
  std::int32_t pattern = 0;
  std::optional<GapBounds> bounds;
};

struct DictGraph {
  std::int32_t num_left = 0;
  std::int32_t num_right = 0;
  std::vector<DictEdge> edges;
  std::vector<std::vector<std::int32_t>> left_edges;   // edge ids per left vertex
  std::vector<std::vector<std::int32_t>> right_edges;  // edge ids per right vertex

  std::int32_t num_vertices() const { return num_left + num_right; }
  std::int32_t unified_right(std::int32_t v) const { return num_left + v; }
  std::vector<std::pair<std::int32_t, std::int32_t>> unified_edges() const;
};

// One edge per gapped pattern; gapless patterns are not part of the graph.
DictGraph build_graph(std::span<const GappedPattern> patterns,
                      const SubpatternIndex& index);
DictGraph build_graph(std::span<const GappedPattern> patterns);

struct Orientation {
  static constexpr std::int32_t kUnoriented = -1;

  std::vector<std::int32_t> tail;  // responsible endpoint per edge (unified id)
  std::vector<std::vector<std::int32_t>> out_edges;  // assigned edges per vertex
  std::vector<std::vector<std::int32_t>> in_edges;   // edges a neighbor is responsible for
  std::int32_t bound = 0;                            // max out-degree

  bool oriented(std::int32_t e) const { return tail[e] != kUnoriented; }
};

struct DegeneracyResult {
  Orientation orientation;
  std::int32_t degeneracy = 0;
  std::vector<std::int32_t> order;  // removal order
};

// Greedy min-degree peeling over an undirected multigraph (parallel edges
// count toward degree; self-loops are rejected). Each removed vertex becomes
// responsible for its remaining edges.
DegeneracyResult degeneracy_orient(
    std::int32_t num_vertices,
    std::span<const std::pair<std::int32_t, std::int32_t>> edges);
DegeneracyResult degeneracy_orient(const DictGraph& graph);

struct HeavyLightSplit {
  std::int64_t threshold = 0;      // ceil(sqrt(d / lsc))
  std::vector<bool> heavy;         // unified ids
  std::int32_t heavy_left = 0;
  std::int32_t heavy_right = 0;
};

// Smallest t with t * t * lsc >= d.
std::int64_t heavy_threshold(std::int64_t d, std::int64_t lsc);

HeavyLightSplit classify_heavy(const DictGraph& graph, std::int64_t lsc);

// Edges touching a light vertex leave a light endpoint (the left one when
// both are light); heavy-heavy edges stay unoriented.
Orientation threshold_orient(const DictGraph& graph, const HeavyLightSplit& split);

}  // namespace gapmatch

#endif  // GAPMATCH_GRAPH_H_
