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

#include "gapmatch/automaton.h"

#include <gtest/gtest.h>

#include <string>
#include <vector>

#include "gapmatch/families.h"
#include "gapmatch/oracle.h"

namespace gapmatch {
namespace {

std::vector<std::int32_t> vertices(const std::vector<Arrival>& arrivals) {
  std::vector<std::int32_t> out;
  for (const auto& a : arrivals) out.push_back(a.vertex);
  return out;
}

std::vector<std::int32_t> lengths(const std::vector<Arrival>& arrivals) {
  std::vector<std::int32_t> out;
  for (const auto& a : arrivals) out.push_back(a.length);
  return out;
}

TEST(Automaton, TwoKeywordsWithSharedSuffix) {
  // "ab" and "b" as first subpatterns.
  auto d = parse_dictionary("ab{0,0}x\nb{0,0}x\n");
  Automaton a(d);
  // Root, a, ab, b, x.
  EXPECT_EQ(a.state_count(), 5u);
  AutomatonCursor cur(a);
  cur.step('a');
  const auto& ev = cur.step('b');
  EXPECT_EQ(lengths(ev.l_arrivals), (std::vector<std::int32_t>{2, 1}));
  EXPECT_EQ(ev.position, 2);
}

TEST(Automaton, EmptyDictionary) {
  Automaton a(std::vector<GappedPattern>{});
  EXPECT_EQ(a.state_count(), 1u);
  AutomatonCursor cur(a);
  for (char c : std::string("hello")) {
    const auto& ev = cur.step(static_cast<unsigned char>(c));
    EXPECT_TRUE(ev.l_arrivals.empty());
    EXPECT_TRUE(ev.r_arrivals.empty());
    EXPECT_TRUE(ev.complete.empty());
  }
}

TEST(Automaton, ChainLengthEqualsLsc) {
  auto d = parse_dictionary("abc{*}bc\nc\n");
  Automaton a(d);
  AutomatonCursor cur(a);
  for (char c : std::string("abc")) cur.step(static_cast<unsigned char>(c));
  EXPECT_EQ(a.chain_length(cur.state()), 3);
  EXPECT_EQ(compute_stats(d).lsc, 3);
}

TEST(Automaton, DirectMatchEvents) {
  auto d = parse_dictionary("ab{0,1}cd\n");
  Automaton a(d);
  AutomatonCursor cur(a);
  std::vector<ArrivalEvent> events;
  for (char c : std::string("abcd")) events.push_back(cur.step(static_cast<unsigned char>(c)));
  EXPECT_TRUE(events[0].l_arrivals.empty());
  EXPECT_EQ(vertices(events[1].l_arrivals), std::vector<std::int32_t>{0});
  EXPECT_TRUE(events[1].r_arrivals.empty());
  EXPECT_TRUE(events[2].r_arrivals.empty());
  EXPECT_EQ(vertices(events[3].r_arrivals), std::vector<std::int32_t>{0});
  EXPECT_EQ(events[3].r_arrivals[0].length, 2);
}

TEST(Automaton, SharedSubpatternArrivesOnBothSides) {
  auto d = parse_dictionary("a{0,0}a\n");
  Automaton a(d);
  AutomatonCursor cur(a);
  const auto& ev = cur.step('a');
  EXPECT_EQ(ev.l_arrivals.size(), 1u);
  EXPECT_EQ(ev.r_arrivals.size(), 1u);
}

TEST(Automaton, GaplessPatternsComplete) {
  auto d = parse_dictionary("ab\nb\nb{*}c\n");
  Automaton a(d);
  AutomatonCursor cur(a);
  cur.step('a');
  auto complete = cur.step('b').complete;
  std::sort(complete.begin(), complete.end());
  EXPECT_EQ(complete, (std::vector<std::int32_t>{0, 1}));
}

TEST(Automaton, EventsMatchSuffixScan) {
  Rng rng(21);
  for (int trial = 0; trial < 300; ++trial) {
    RandomDictOptions opts;
    opts.max_len = 4;
    opts.gapless_rate = 0.1;
    auto d = random_dictionary(rng, GapRegime::kNonUniform, opts);
    // Small dense thresholds exercise the sparse goto path too.
    Automaton a(d, trial % 2 == 0 ? Automaton::kDefaultDenseThreshold : 1);
    auto text = random_text(rng, 80, "abcd");
    AutomatonCursor cur(a);
    for (std::size_t end = 1; end <= text.size(); ++end) {
      const auto& ev = cur.step(static_cast<unsigned char>(text[end - 1]));
      auto [left, right] = oracle_arrivals(a.index(), text, end);
      ASSERT_EQ(vertices(ev.l_arrivals), left);
      ASSERT_EQ(vertices(ev.r_arrivals), right);
      auto ls = lengths(ev.l_arrivals);
      for (std::size_t k = 1; k < ls.size(); ++k) ASSERT_GT(ls[k - 1], ls[k]);
      auto st = compute_stats(d);
      ASSERT_LE(static_cast<std::int64_t>(ev.l_arrivals.size()), st.lsc);
      ASSERT_LE(static_cast<std::int64_t>(ev.r_arrivals.size()), st.lsc);
    }
  }
}

TEST(Automaton, Deterministic) {
  Rng rng(3);
  auto d = random_dictionary(rng, GapRegime::kUniform, {});
  auto text = random_text(rng, 300, "abc");
  Automaton a(d), b(d);
  AutomatonCursor ca(a), cb(b);
  for (char c : text) {
    const auto& ea = ca.step(static_cast<unsigned char>(c));
    const auto& eb = cb.step(static_cast<unsigned char>(c));
    ASSERT_EQ(ea.l_arrivals, eb.l_arrivals);
    ASSERT_EQ(ea.r_arrivals, eb.r_arrivals);
  }
}

TEST(SuffixTree, SiblingsUnderCommonSuffix) {
  auto d = parse_dictionary("a{*}z\nba{*}z\nca{*}z\n");
  Automaton a(d);
  SuffixTree t = a.build_suffix_tree();
  EXPECT_EQ(t.size(), 4);
  EXPECT_EQ(t.parent[0], t.root);
  EXPECT_EQ(t.parent[1], 0);
  EXPECT_EQ(t.parent[2], 0);
  EXPECT_EQ(t.depth[1], 2);
  EXPECT_EQ(t.parent[t.root], -1);
}

TEST(SuffixTree, SingleVertex) {
  Automaton a(parse_dictionary("x{*}y\n"));
  SuffixTree t = a.build_suffix_tree();
  EXPECT_EQ(t.parent[0], t.root);
  EXPECT_EQ(t.depth[0], 1);
}

TEST(SuffixTree, ParentsMatchPairwiseSuffixCheck) {
  Rng rng(8);
  for (int trial = 0; trial < 200; ++trial) {
    RandomDictOptions opts;
    opts.max_len = 5;
    opts.alphabet = "ab";
    auto d = random_dictionary(rng, GapRegime::kUnbounded, opts);
    Automaton a(d);
    SuffixTree t = a.build_suffix_tree();
    const auto& left = a.index().left;
    std::int64_t lsc = compute_stats(d).lsc;
    for (std::size_t u = 0; u < left.size(); ++u) {
      std::int32_t expect = t.root;
      std::size_t best = 0;
      for (std::size_t w = 0; w < left.size(); ++w) {
        const auto& s = left[w];
        if (s.size() < left[u].size() && s.size() > best &&
            left[u].compare(left[u].size() - s.size(), s.size(), s) == 0) {
          best = s.size();
          expect = static_cast<std::int32_t>(w);
        }
      }
      ASSERT_EQ(t.parent[u], expect);
      ASSERT_LE(t.depth[u], lsc);
    }
  }
}

}  // namespace
}  // namespace gapmatch
