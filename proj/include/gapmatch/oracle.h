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

// Brute-force reference implementations. They evaluate the definitions
// directly and share no code with the engines.

#ifndef GAPMATCH_ORACLE_H_
#define GAPMATCH_ORACLE_H_

#include <cstdint>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "gapmatch/dictionary.h"
#include "gapmatch/engine.h"
#include "gapmatch/isg.h"
#include "gapmatch/triangles.h"

namespace gapmatch {

// All occurrences, ordered by (end, pattern, witness).
std::vector<Occurrence> oracle_dmog(std::span<const GappedPattern> patterns,
                                    std::string_view text, ReportMode mode);

// Every (edge, j, i) with j < i, seq[j] = tail, seq[i] = head and
// alpha <= i - j <= beta. Positions are 1-based; sorted.
std::vector<IsgReport> oracle_isg(std::int32_t num_vertices, std::span<const IsgEdge> edges,
                                  std::span<const std::int32_t> sequence);

// Per step, the sorted ids of edges whose tail arrived at some earlier step.
std::vector<std::vector<std::int32_t>> oracle_isg_unbounded(
    std::int32_t num_vertices, std::span<const IsgEdge> edges,
    std::span<const std::int32_t> sequence);

// Largest minimum degree over all nonempty vertex subsets (parallel edges
// count). Exponential; at most 20 vertices.
std::int32_t oracle_degeneracy(std::int32_t num_vertices,
                               std::span<const std::pair<std::int32_t, std::int32_t>> edges);

// Triple loop over vertices; sorted.
std::vector<Triangle> enumerate_triangles_oracle(const QueryGraph& graph);

// Dictionary subpatterns that are suffixes of text[0, end). Returns (left
// ids, right ids), each sorted by decreasing length.
std::pair<std::vector<std::int32_t>, std::vector<std::int32_t>> oracle_arrivals(
    const SubpatternIndex& index, std::string_view text, std::size_t end);

}  // namespace gapmatch

#endif  // GAPMATCH_ORACLE_H_
