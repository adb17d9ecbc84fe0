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

#include "gapmatch/oracle.h"

#include <algorithm>
#include <stdexcept>
#include <tuple>

namespace gapmatch {
namespace {

// ends[k] is true when `word` ends at 1-based position k of `text`.
std::vector<bool> end_positions(std::string_view word, std::string_view text) {
  std::vector<bool> ends(text.size() + 1, false);
  if (word.empty()) return ends;
  for (std::size_t k = word.size(); k <= text.size(); ++k) {
    ends[k] = text.substr(k - word.size(), word.size()) == word;
  }
  return ends;
}

bool ends_with(std::string_view text, std::size_t end, std::string_view word) {
  return word.size() <= end && text.substr(end - word.size(), word.size()) == word;
}

}  // namespace

std::vector<Occurrence> oracle_dmog(std::span<const GappedPattern> patterns,
                                    std::string_view text, ReportMode mode) {
  const auto n = static_cast<std::int64_t>(text.size());
  std::vector<Occurrence> out;
  for (const GappedPattern& p : patterns) {
    auto first = end_positions(p.first, text);
    if (p.gapless()) {
      for (std::int64_t i = 1; i <= n; ++i) {
        if (first[i]) out.push_back({p.id, i, std::nullopt});
      }
      continue;
    }
    auto second = end_positions(p.second, text);
    std::vector<std::int64_t> prefix(n + 2, 0);  // prefix[k] = #ends of p1 in [1, k)
    for (std::int64_t k = 1; k <= n + 1; ++k) prefix[k] = prefix[k - 1] + (first[k - 1] ? 1 : 0);
    const auto m = static_cast<std::int64_t>(p.second.size());
    for (std::int64_t i = 1; i <= n; ++i) {
      if (!second[i]) continue;
      // gap = i - m - j, so j ranges over [i - m - beta, i - m - alpha].
      std::int64_t hi = i - m - (p.bounds ? p.bounds->alpha : 0);
      std::int64_t lo = p.bounds ? i - m - p.bounds->beta : 1;
      lo = std::max<std::int64_t>(lo, 1);
      if (hi < lo) continue;
      if (mode == ReportMode::kDedup) {
        if (prefix[hi + 1] - prefix[lo] > 0) out.push_back({p.id, i, std::nullopt});
      } else {
        for (std::int64_t j = lo; j <= hi; ++j) {
          if (first[j]) out.push_back({p.id, i, j});
        }
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const Occurrence& a, const Occurrence& b) {
    return std::tie(a.end, a.pattern, a.witness) < std::tie(b.end, b.pattern, b.witness);
  });
  return out;
}

std::vector<IsgReport> oracle_isg(std::int32_t num_vertices, std::span<const IsgEdge> edges,
                                  std::span<const std::int32_t> sequence) {
  for (std::int32_t x : sequence) {
    if (x < 0 || x >= num_vertices) throw std::out_of_range("sequence vertex");
  }
  std::vector<IsgReport> out;
  const auto len = static_cast<std::int64_t>(sequence.size());
  for (std::int64_t i = 1; i <= len; ++i) {
    for (std::int64_t j = 1; j < i; ++j) {
      for (std::int32_t e = 0; e < static_cast<std::int32_t>(edges.size()); ++e) {
        const IsgEdge& edge = edges[e];
        if (edge.tail != sequence[j - 1] || edge.head != sequence[i - 1]) continue;
        if (i - j < edge.alpha || i - j > edge.beta) continue;
        out.push_back({e, j, i});
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<std::int32_t>> oracle_isg_unbounded(
    std::int32_t num_vertices, std::span<const IsgEdge> edges,
    std::span<const std::int32_t> sequence) {
  std::vector<std::vector<std::int32_t>> out(sequence.size());
  std::vector<bool> seen(num_vertices, false);
  for (std::size_t i = 0; i < sequence.size(); ++i) {
    for (std::int32_t e = 0; e < static_cast<std::int32_t>(edges.size()); ++e) {
      if (edges[e].head == sequence[i] && seen[edges[e].tail]) out[i].push_back(e);
    }
    seen[sequence[i]] = true;
  }
  return out;
}

std::int32_t oracle_degeneracy(std::int32_t num_vertices,
                               std::span<const std::pair<std::int32_t, std::int32_t>> edges) {
  if (num_vertices > 20) throw std::invalid_argument("too many vertices for exhaustive search");
  std::int32_t best = 0;
  std::vector<std::int32_t> deg(num_vertices);
  for (std::uint32_t mask = 1; mask < (1u << num_vertices); ++mask) {
    std::fill(deg.begin(), deg.end(), 0);
    for (auto [a, b] : edges) {
      if ((mask >> a & 1u) && (mask >> b & 1u)) {
        ++deg[a];
        ++deg[b];
      }
    }
    std::int32_t lowest = -1;
    for (std::int32_t v = 0; v < num_vertices; ++v) {
      if ((mask >> v & 1u) && (lowest < 0 || deg[v] < lowest)) lowest = deg[v];
    }
    best = std::max(best, lowest);
  }
  return best;
}

std::vector<Triangle> enumerate_triangles_oracle(const QueryGraph& graph) {
  const std::int32_t n = graph.num_vertices();
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (auto [a, b] : graph.edges()) adj[a][b] = adj[b][a] = true;
  std::vector<Triangle> out;
  for (std::int32_t a = 0; a < n; ++a) {
    for (std::int32_t b = a + 1; b < n; ++b) {
      if (!adj[a][b]) continue;
      for (std::int32_t c = b + 1; c < n; ++c) {
        if (adj[a][c] && adj[b][c]) out.push_back({a, b, c});
      }
    }
  }
  return out;
}

std::pair<std::vector<std::int32_t>, std::vector<std::int32_t>> oracle_arrivals(
    const SubpatternIndex& index, std::string_view text, std::size_t end) {
  auto pick = [&](const std::vector<std::string>& words) {
    std::vector<std::int32_t> ids;
    for (std::int32_t w = 0; w < static_cast<std::int32_t>(words.size()); ++w) {
      if (ends_with(text, end, words[w])) ids.push_back(w);
    }
    std::sort(ids.begin(), ids.end(), [&](std::int32_t a, std::int32_t b) {
      return words[a].size() > words[b].size();
    });
    return ids;
  };
  return {pick(index.left), pick(index.right)};
}

}  // namespace gapmatch
