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

// Seeded instance generators shared by the tests, the acceptance suite and
// the bench command.

#ifndef GAPMATCH_FAMILIES_H_
#define GAPMATCH_FAMILIES_H_

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gapmatch/dictionary.h"
#include "gapmatch/engine.h"
#include "gapmatch/isg.h"

namespace gapmatch {

using Rng = std::mt19937_64;

struct RandomDictOptions {
  std::int32_t max_patterns = 50;
  std::int32_t max_len = 8;
  std::string alphabet = "abc";
  double gapless_rate = 0.05;
  std::int64_t max_alpha = 6;
  std::int64_t max_span = 6;
  // Non-uniform only: share of unbounded gaps mixed in.
  double unbounded_rate = 0.0;
  // Draw subpatterns from pools this small to create heavy vertices; 0 means
  // no pooling.
  std::int32_t pool = 0;
};

std::vector<GappedPattern> random_dictionary(Rng& rng, GapRegime regime,
                                             const RandomDictOptions& options);
std::string random_text(Rng& rng, std::size_t length, std::string_view alphabet);

// Random directed multigraph on n vertices with per-edge windows drawn from
// [0, max_alpha] and span [0, max_span] (ignored if `bounded` is false).
std::vector<IsgEdge> random_isg_edges(Rng& rng, std::int32_t n, std::int32_t m, bool bounded,
                                      std::int64_t max_alpha, std::int64_t max_span);

// Random simple undirected graph with at most m edges.
std::vector<std::pair<std::int32_t, std::int32_t>> random_simple_graph(Rng& rng, std::int32_t n,
                                                                       std::int32_t m);

struct Family {
  std::string name;
  std::int64_t size = 0;  // the scaled parameter
  std::vector<GappedPattern> patterns;
  std::string text;
};

// All 256 length-4 strings over {a,b,c,d}: those starting with a or b are
// first subpatterns, the rest second subpatterns. They are split into
// 128 / delta disjoint copies of K_{delta,delta}, all with gap {0,2}.
Family orientation_family(std::int32_t delta, std::uint64_t seed, std::size_t text_length);

// K_{q,q} with q = sqrt(d): first subpatterns form suffix chains of four,
// so lsc = 4 and every vertex is heavy. Gap {0,3}.
Family threshold_family(std::int32_t d, std::uint64_t seed, std::size_t text_length);

// The threshold family's dictionary with per-pattern windows of width up to
// `span` (non-uniform heavy-heavy edges).
Family threshold_nonuniform_family(std::int32_t d, std::int64_t span, std::uint64_t seed,
                                   std::size_t text_length);

// A fixed 40-pattern uniform dictionary run with gap {alpha, beta}.
Family space_family(std::int64_t alpha, std::int64_t beta, std::uint64_t seed,
                    std::size_t text_length);

struct FamilyMeasure {
  std::int64_t d = 0;
  std::int64_t lsc = 0;
  std::int64_t delta = 0;
  std::int64_t max_second = 0;
  std::int64_t steps = 0;
  std::uint64_t total_work = 0;
  std::uint64_t total_output = 0;
  std::uint64_t work_p50 = 0;
  std::uint64_t work_p90 = 0;
  std::uint64_t work_p99 = 0;
  std::uint64_t work_max = 0;
  std::int64_t max_space = 0;
  double seconds = 0.0;
};

FamilyMeasure measure(const Family& family, EngineConfig config, bool sample_space = false);

// Nearest-rank percentile of an unsorted sample (q in [0, 1]).
std::uint64_t percentile(std::vector<std::uint64_t> sample, double q);

}  // namespace gapmatch

#endif  // GAPMATCH_FAMILIES_H_
