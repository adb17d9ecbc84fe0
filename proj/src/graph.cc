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

#include "gapmatch/graph.h"

#include <algorithm>
#include <stdexcept>

namespace gapmatch {

std::vector<std::pair<std::int32_t, std::int32_t>> DictGraph::unified_edges() const {
  std::vector<std::pair<std::int32_t, std::int32_t>> out;
  out.reserve(edges.size());
  for (const auto& e : edges) out.emplace_back(e.left, unified_right(e.right));
  return out;
}

DictGraph build_graph(std::span<const GappedPattern> patterns,
                      const SubpatternIndex& index) {
  DictGraph g;
  g.num_left = static_cast<std::int32_t>(index.left.size());
  g.num_right = static_cast<std::int32_t>(index.right.size());
  g.left_edges.resize(g.num_left);
  g.right_edges.resize(g.num_right);
  for (const auto& p : patterns) {
    if (p.gapless()) continue;
    auto e = static_cast<std::int32_t>(g.edges.size());
    DictEdge edge{index.pattern_left[p.id], index.pattern_right[p.id], p.id, p.bounds};
    g.left_edges[edge.left].push_back(e);
    g.right_edges[edge.right].push_back(e);
    g.edges.push_back(edge);
  }
  return g;
}

DictGraph build_graph(std::span<const GappedPattern> patterns) {
  return build_graph(patterns, index_subpatterns(patterns));
}

DegeneracyResult degeneracy_orient(
    std::int32_t n, std::span<const std::pair<std::int32_t, std::int32_t>> edges) {
  DegeneracyResult r;
  auto& o = r.orientation;
  const auto m = static_cast<std::int32_t>(edges.size());
  o.tail.assign(m, Orientation::kUnoriented);
  o.out_edges.assign(n, {});
  o.in_edges.assign(n, {});

  std::vector<std::vector<std::int32_t>> incident(n);
  std::vector<std::int32_t> deg(n, 0);
  for (std::int32_t e = 0; e < m; ++e) {
    auto [a, b] = edges[e];
    if (a < 0 || b < 0 || a >= n || b >= n) throw std::out_of_range("edge endpoint");
    if (a == b) throw std::invalid_argument("self-loops are not supported");
    incident[a].push_back(e);
    incident[b].push_back(e);
    ++deg[a];
    ++deg[b];
  }

  // Bucket sort by degree; bin[k] is the first slot of degree-k vertices.
  std::int32_t max_deg = n > 0 ? *std::max_element(deg.begin(), deg.end()) : 0;
  std::vector<std::int32_t> bin(max_deg + 2, 0);
  for (std::int32_t v = 0; v < n; ++v) ++bin[deg[v] + 1];
  for (std::int32_t k = 1; k <= max_deg + 1; ++k) bin[k] += bin[k - 1];
  std::vector<std::int32_t> vert(n), pos(n);
  {
    auto fill = bin;
    for (std::int32_t v = 0; v < n; ++v) {
      pos[v] = fill[deg[v]]++;
      vert[pos[v]] = v;
    }
  }

  r.order.reserve(n);
  for (std::int32_t i = 0; i < n; ++i) {
    std::int32_t v = vert[i];
    r.order.push_back(v);
    r.degeneracy = std::max(r.degeneracy, deg[v]);
    for (std::int32_t e : incident[v]) {
      if (o.tail[e] != Orientation::kUnoriented) continue;
      auto [a, b] = edges[e];
      std::int32_t w = a == v ? b : a;
      o.tail[e] = v;
      o.out_edges[v].push_back(e);
      o.in_edges[w].push_back(e);
      if (deg[w] > deg[v]) {
        std::int32_t dw = deg[w];
        std::int32_t pw = pos[w];
        std::int32_t first = bin[dw];
        std::int32_t u = vert[first];
        if (u != w) {
          std::swap(vert[pw], vert[first]);
          pos[u] = pw;
          pos[w] = first;
        }
        ++bin[dw];
        --deg[w];
      }
    }
  }
  for (const auto& out : o.out_edges) {
    o.bound = std::max(o.bound, static_cast<std::int32_t>(out.size()));
  }
  return r;
}

DegeneracyResult degeneracy_orient(const DictGraph& graph) {
  auto edges = graph.unified_edges();
  return degeneracy_orient(graph.num_vertices(), edges);
}

std::int64_t heavy_threshold(std::int64_t d, std::int64_t lsc) {
  if (d <= 0) return 0;
  if (lsc < 1) lsc = 1;
  // t * t * lsc >= d  <=>  t * t >= ceil(d / lsc), and sqrt(2^63) < 3037000500.
  const std::int64_t need = d / lsc + (d % lsc != 0);
  std::int64_t lo = 0, hi = std::min<std::int64_t>(need, 3037000499);
  while (lo < hi) {
    std::int64_t mid = lo + (hi - lo) / 2;
    if (mid * mid >= need) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  return lo;
}

HeavyLightSplit classify_heavy(const DictGraph& graph, std::int64_t lsc) {
  HeavyLightSplit s;
  const auto d = static_cast<std::int64_t>(graph.edges.size());
  s.threshold = heavy_threshold(d, lsc);
  s.heavy.assign(graph.num_vertices(), false);
  for (std::int32_t u = 0; u < graph.num_left; ++u) {
    if (static_cast<std::int64_t>(graph.left_edges[u].size()) > s.threshold) {
      s.heavy[u] = true;
      ++s.heavy_left;
    }
  }
  for (std::int32_t v = 0; v < graph.num_right; ++v) {
    if (static_cast<std::int64_t>(graph.right_edges[v].size()) > s.threshold) {
      s.heavy[graph.unified_right(v)] = true;
      ++s.heavy_right;
    }
  }
  return s;
}

Orientation threshold_orient(const DictGraph& graph, const HeavyLightSplit& split) {
  Orientation o;
  const auto m = static_cast<std::int32_t>(graph.edges.size());
  o.tail.assign(m, Orientation::kUnoriented);
  o.out_edges.assign(graph.num_vertices(), {});
  o.in_edges.assign(graph.num_vertices(), {});
  for (std::int32_t e = 0; e < m; ++e) {
    std::int32_t u = graph.edges[e].left;
    std::int32_t v = graph.unified_right(graph.edges[e].right);
    std::int32_t tail;
    if (!split.heavy[u]) {
      tail = u;
    } else if (!split.heavy[v]) {
      tail = v;
    } else {
      continue;
    }
    std::int32_t head = tail == u ? v : u;
    o.tail[e] = tail;
    o.out_edges[tail].push_back(e);
    o.in_edges[head].push_back(e);
  }
  for (const auto& out : o.out_edges) {
    o.bound = std::max(o.bound, static_cast<std::int32_t>(out.size()));
  }
  return o;
}

}  // namespace gapmatch
