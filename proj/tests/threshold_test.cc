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

#include <gtest/gtest.h>

#include <algorithm>
#include <string>
#include <vector>

#include "gapmatch/engine.h"
#include "gapmatch/families.h"
#include "gapmatch/oracle.h"
#include "gapmatch/tree_arrays.h"
#include "test_support.h"

namespace gapmatch {
namespace {

// Tree from a parent array; the root is the node whose parent is -1.
SuffixTree tree_from_parents(std::vector<std::int32_t> parent) {
  SuffixTree t;
  const auto n = static_cast<std::int32_t>(parent.size());
  t.parent = std::move(parent);
  t.children.assign(n, {});
  t.depth.assign(n, 0);
  for (std::int32_t u = 0; u < n; ++u) {
    if (t.parent[u] < 0) {
      t.root = u;
    } else {
      t.children[t.parent[u]].push_back(u);
    }
  }
  for (std::int32_t u = 0; u < n; ++u) {
    for (std::int32_t w = t.parent[u]; w >= 0; w = t.parent[w]) ++t.depth[u];
  }
  return t;
}

std::vector<std::int32_t> specials_of(const std::vector<bool>& flags) {
  std::vector<std::int32_t> out;
  for (std::size_t u = 0; u < flags.size(); ++u) {
    if (flags[u]) out.push_back(static_cast<std::int32_t>(u));
  }
  return out;
}

TEST(PartitionTree, PathPeelsMiddle) {
  // a = 0, b = 1, c = 2, root = 3.
  auto t = tree_from_parents({3, 0, 1, -1});
  std::vector<std::int64_t> w{1, 1, 1, 1};
  EXPECT_EQ(specials_of(partition_tree(t, w, 2)), (std::vector<std::int32_t>{1, 3}));
}

TEST(PartitionTree, SingleNode) {
  auto t = tree_from_parents({-1});
  std::vector<std::int64_t> w{5};
  EXPECT_EQ(specials_of(partition_tree(t, w, 1)), std::vector<std::int32_t>{0});
}

TEST(PartitionTree, LightStar) {
  auto t = tree_from_parents({-1, 0, 0, 0, 0, 0});
  std::vector<std::int64_t> w{0, 1, 1, 1, 1, 1};
  EXPECT_EQ(specials_of(partition_tree(t, w, 10)), std::vector<std::int32_t>{0});
}

TEST(AncestorHeads, RootOnlySpecial) {
  // root = 0, a = 1 owns the only edge (slot 0, head 7).
  auto t = tree_from_parents({-1, 0});
  AncestorHeads h(t, 1, {{}, {{0, 7}}}, 100);
  EXPECT_EQ(h.special_count(), 1);
  std::vector<std::int32_t> scratch;
  std::uint64_t work = 0;
  EXPECT_EQ(h.heads(0, scratch, work)[0], AncestorHeads::kNil);
  EXPECT_EQ(h.heads(1, scratch, work)[0], 7);
}

TEST(AncestorHeads, SpecialChild) {
  auto t = tree_from_parents({-1, 0});
  AncestorHeads h(t, 1, {{}, {{0, 7}}}, 1);
  EXPECT_TRUE(h.special(1));
  std::vector<std::int32_t> scratch;
  std::uint64_t work = 0;
  EXPECT_EQ(h.heads(1, scratch, work)[0], 7);
}

TEST(AncestorHeads, MatchRootPathScan) {
  Rng rng(41);
  for (int trial = 0; trial < 200; ++trial) {
    const std::int32_t n = 1 + static_cast<std::int32_t>(rng() % 40);
    std::vector<std::int32_t> parent(n, -1);
    for (std::int32_t u = 1; u < n; ++u) parent[u] = static_cast<std::int32_t>(rng() % u);
    auto t = tree_from_parents(parent);
    const std::int32_t width = 1 + static_cast<std::int32_t>(rng() % 6);
    std::vector<AncestorHeads::Owned> owned(n);
    std::int32_t next_head = 0;
    std::int64_t total = 0;
    for (std::int32_t u = 0; u < n; ++u) {
      for (std::int32_t s = 0; s < width; ++s) {
        if (rng() % 3 == 0) {
          owned[u].emplace_back(s, next_head++);
          ++total;
        }
      }
    }
    const std::int64_t threshold = 1 + static_cast<std::int64_t>(rng() % 8);
    AncestorHeads h(t, width, owned, threshold);
    ASSERT_LT(h.max_path_weight(), threshold);
    ASSERT_LE(h.special_count(), total / threshold + 1);
    std::vector<std::int32_t> scratch;
    std::uint64_t work = 0;
    for (std::int32_t u = 0; u < n; ++u) {
      std::vector<std::int32_t> expect(width, AncestorHeads::kNil);
      for (std::int32_t w = u; w >= 0; w = parent[w]) {
        for (auto [s, head] : owned[w]) {
          if (expect[s] == AncestorHeads::kNil) expect[s] = head;
        }
      }
      work = 0;
      ASSERT_EQ(h.heads(u, scratch, work), expect) << "trial " << trial << " node " << u;
      // Rebuilding costs the width plus the path to the nearest special.
      ASSERT_LE(work, static_cast<std::uint64_t>(2 * width + 2 + t.depth[u] + threshold));
    }
  }
}

TEST(CeilSqrt, Values) {
  EXPECT_EQ(ceil_sqrt(0), 0);
  EXPECT_EQ(ceil_sqrt(1), 1);
  EXPECT_EQ(ceil_sqrt(15), 4);
  EXPECT_EQ(ceil_sqrt(16), 4);
  EXPECT_EQ(ceil_sqrt(17), 5);
}

TEST(ThresholdEngine, LightOnlyMatchesOrientation) {
  Rng rng(42);
  for (int trial = 0; trial < 50; ++trial) {
    auto patterns = random_dictionary(rng, GapRegime::kUniform, {});
    auto dict = compile(patterns);
    if (dict->split.heavy_left + dict->split.heavy_right > 0) continue;
    auto text = random_text(rng, 300, "abc");
    EngineConfig t;
    t.kind = EngineKind::kThreshold;
    EXPECT_EQ(match_all(dict, text), match_all(dict, text, t));
    Matcher m(dict, t);
    EXPECT_EQ(m.special_vertices(), 0);
  }
}

TEST(ThresholdEngine, NineHeavyWindows) {
  std::string dict;
  for (int g = 0; g <= 8; ++g) dict += "a{" + std::to_string(g) + "," + std::to_string(g) + "}b\n";
  auto compiled = compile(parse_dictionary(dict));
  ASSERT_EQ(compiled->split.threshold, 3);
  ASSERT_EQ(compiled->split.heavy_left, 1);
  ASSERT_EQ(compiled->split.heavy_right, 1);
  for (int g = 0; g <= 8; ++g) {
    std::string text = "a" + std::string(static_cast<std::size_t>(g), 'x') + "b";
    auto got = testing::run(dict, text, EngineKind::kThreshold, ReportMode::kWitness);
    ASSERT_EQ(got.size(), 1u) << g;
    EXPECT_EQ(got[0].pattern, g);
    EXPECT_EQ(got[0].witness, 1);
    EXPECT_EQ(got[0].end, g + 2);
  }
}

TEST(ThresholdEngine, HeavyUniformChains) {
  // Every first subpattern pairs with every second one; chains a, ba, cba.
  const std::string dict =
      "a{1,2}x\na{1,2}y\na{1,2}z\nba{1,2}x\nba{1,2}y\nba{1,2}z\ncba{1,2}x\ncba{1,2}y\n"
      "cba{1,2}z\n";
  auto compiled = compile(parse_dictionary(dict));
  ASSERT_GT(compiled->split.heavy_left, 0);
  const std::string text = "cbaqx cbaqqy aqz baqqqx cbay";
  for (auto mode : {ReportMode::kDedup, ReportMode::kWitness}) {
    EXPECT_EQ(testing::run(dict, text, EngineKind::kThreshold, mode),
              oracle_dmog(compiled->patterns, text, mode));
  }
}

TEST(ThresholdEngine, SpanCap) {
  auto compiled = compile(parse_dictionary([] {
    std::string d;
    for (int k = 0; k < 9; ++k) d += "a{" + std::to_string(k) + ",500}b\n";
    return d;
  }()));
  EngineConfig c;
  c.kind = EngineKind::kThreshold;
  c.max_window_span = 100;
  EXPECT_THROW(Matcher(compiled, c), EngineError);
  c.max_window_span = 1000;
  EXPECT_NO_THROW(Matcher(compiled, c));
}

TEST(ThresholdEngine, DenseRandomInstances) {
  Rng rng(43);
  for (auto regime : {GapRegime::kUnbounded, GapRegime::kUniform, GapRegime::kNonUniform}) {
    for (int trial = 0; trial < 120; ++trial) {
      RandomDictOptions opts;
      opts.pool = 2 + static_cast<std::int32_t>(rng() % 3);
      opts.max_len = 4;
      if (regime == GapRegime::kNonUniform && trial % 2) opts.unbounded_rate = 0.25;
      auto patterns = random_dictionary(rng, regime, opts);
      auto dict = compile(patterns);
      auto text = random_text(rng, 1 + rng() % 400, "abc");
      for (auto mode : {ReportMode::kDedup, ReportMode::kWitness}) {
        auto expect = oracle_dmog(patterns, text, mode);
        auto t = match_all(dict, text, testing::config(EngineKind::kThreshold, mode));
        auto o = match_all(dict, text, testing::config(EngineKind::kOrientation, mode));
        ASSERT_EQ(t, expect) << regime_name(regime) << " trial " << trial;
        ASSERT_EQ(o, expect) << regime_name(regime) << " trial " << trial;
      }
    }
  }
}

TEST(ThresholdEngine, ResidentArraysAreSpecials) {
  Family f = threshold_family(64, 1, 2000);
  auto dict = compile(f.patterns);
  Matcher m(dict, testing::config(EngineKind::kThreshold, ReportMode::kDedup));
  for (char c : f.text) m.step(static_cast<unsigned char>(c));
  EXPECT_GT(m.special_vertices(), 0);
  EXPECT_EQ(m.resident_arrays(), m.special_vertices());
  // Specials stay within sqrt(d / lsc) times a small constant.
  const auto bound = heavy_threshold(dict->stats.d, dict->stats.lsc);
  EXPECT_LE(m.special_vertices(), 4 * bound + 2);
}

}  // namespace
}  // namespace gapmatch
