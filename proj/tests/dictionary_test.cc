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

#include "gapmatch/dictionary.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <sstream>

#include "gapmatch/automaton.h"
#include "gapmatch/families.h"

namespace gapmatch {
namespace {

TEST(ParsePattern, Bounded) {
  auto p = parse_pattern("ab{1,3}cd", 0);
  EXPECT_EQ(p.first, "ab");
  EXPECT_EQ(p.second, "cd");
  ASSERT_TRUE(p.bounds.has_value());
  EXPECT_EQ(*p.bounds, (GapBounds{1, 3}));
  EXPECT_TRUE(p.bounded());
}

TEST(ParsePattern, Unbounded) {
  auto p = parse_pattern("ab{*}cd", 4);
  EXPECT_EQ(p.id, 4);
  EXPECT_EQ(p.first, "ab");
  EXPECT_EQ(p.second, "cd");
  EXPECT_FALSE(p.bounds.has_value());
  EXPECT_FALSE(p.gapless());
}

TEST(ParsePattern, Gapless) {
  auto p = parse_pattern("abc", 0);
  EXPECT_TRUE(p.gapless());
  EXPECT_EQ(p.first, "abc");
}

TEST(ParsePattern, Escapes) {
  auto p = parse_pattern(R"(a\{b{0,0}\}\\)", 0);
  EXPECT_EQ(p.first, "a{b");
  EXPECT_EQ(p.second, "}\\");
}

TEST(ParsePattern, Errors) {
  const char* bad[] = {"ab{3,1}cd", "{0,1}cd", "ab{0,1", "ab{0;1}cd", "ab{-1,2}cd",
                       "ab{0,1}",   "a}b",     "a\\q",   "a{0,1}b{0,1}c", "a\\",
                       "ab{,1}cd",  "ab{x,1}cd"};
  for (const char* line : bad) {
    EXPECT_THROW(parse_pattern(line, 0, 7), ParseError) << line;
  }
  try {
    parse_pattern("ab{3,1}cd", 0, 7);
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 7u);
    EXPECT_NE(std::string(e.what()).find("line 7"), std::string::npos);
  }
}

TEST(ParseDictionary, SkipsCommentsAndBlanks) {
  auto d = parse_dictionary("# header\n\nab{0,1}cd\n   # indented\nxy\r\n  \nq{*}r\n");
  ASSERT_EQ(d.size(), 3u);
  EXPECT_EQ(d[0].id, 0);
  EXPECT_EQ(d[1].id, 1);
  EXPECT_EQ(d[1].first, "xy");
  EXPECT_EQ(d[2].id, 2);
  EXPECT_EQ(d[2].second, "r");
}

TEST(ParseDictionary, ErrorNamesLine) {
  try {
    parse_dictionary("ab\n# c\ncd{2,1}e\n");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
}

TEST(ParseDictionary, FromStream) {
  std::istringstream in("a{0,0}b\nc\n");
  auto d = parse_dictionary(in);
  ASSERT_EQ(d.size(), 2u);
  EXPECT_TRUE(d[1].gapless());
}

TEST(RenderPattern, RoundTripsRandomPatterns) {
  Rng rng(11);
  RandomDictOptions opts;
  opts.alphabet = "ab{}\\";
  opts.unbounded_rate = 0.3;
  opts.gapless_rate = 0.2;
  for (int trial = 0; trial < 200; ++trial) {
    auto d = random_dictionary(rng, GapRegime::kNonUniform, opts);
    for (const auto& p : d) {
      EXPECT_EQ(parse_pattern(render_pattern(p), p.id), p);
    }
  }
}

TEST(RenderPattern, Canonical) {
  EXPECT_EQ(render_pattern(parse_pattern("ab{01,3}cd", 0)), "ab{1,3}cd");
  EXPECT_EQ(render_pattern(parse_pattern("a\\{{*}b", 0)), "a\\{{*}b");
}

TEST(Stats, SuffixChainOfThree) {
  auto s = compute_stats(parse_dictionary("a{*}ba\ncba\n"));
  EXPECT_EQ(s.lsc, 3);
}

TEST(Stats, SinglePattern) {
  auto s = compute_stats(parse_dictionary("ab{1,3}cd\n"));
  EXPECT_EQ(s.d, 1);
  EXPECT_EQ(s.max_second, 2);
  EXPECT_EQ(s.alpha_star, 1);
  EXPECT_EQ(s.beta_star, 3);
  EXPECT_EQ(s.regime, GapRegime::kUniform);
  EXPECT_EQ(s.lsc, 1);
  EXPECT_EQ(s.total_len, 4);
}

TEST(Stats, NoSuffixRelations) {
  auto s = compute_stats(parse_dictionary("ab{0,1}cd\nef\n"));
  EXPECT_EQ(s.lsc, 1);
  EXPECT_EQ(s.gapless, 1);
}

TEST(Stats, Regimes) {
  EXPECT_EQ(compute_stats(parse_dictionary("a{*}b\nc{*}d\n")).regime, GapRegime::kUnbounded);
  EXPECT_EQ(compute_stats(parse_dictionary("a{1,2}b\nc{1,2}d\n")).regime, GapRegime::kUniform);
  EXPECT_EQ(compute_stats(parse_dictionary("a{1,2}b\nc{1,3}d\n")).regime,
            GapRegime::kNonUniform);
  auto mixed = compute_stats(parse_dictionary("a{1,2}b\nc{*}d\n"));
  EXPECT_EQ(mixed.regime, GapRegime::kNonUniform);
  EXPECT_TRUE(mixed.has_unbounded);
  EXPECT_EQ(compute_stats({}).d, 0);
  EXPECT_EQ(compute_stats({}).lsc, 0);
}

TEST(Stats, RegimeStableUnderReordering) {
  Rng rng(5);
  for (auto regime : {GapRegime::kUnbounded, GapRegime::kUniform, GapRegime::kNonUniform}) {
    for (int trial = 0; trial < 50; ++trial) {
      auto d = random_dictionary(rng, regime, {});
      auto s = compute_stats(d);
      std::shuffle(d.begin(), d.end(), rng);
      for (std::size_t k = 0; k < d.size(); ++k) d[k].id = static_cast<std::int32_t>(k);
      auto t = compute_stats(d);
      EXPECT_EQ(s.regime, t.regime);
      EXPECT_EQ(s.lsc, t.lsc);
      EXPECT_EQ(s.alpha_star, t.alpha_star);
      EXPECT_EQ(s.beta_star, t.beta_star);
    }
  }
}

TEST(Stats, LscMatchesAutomatonChains) {
  Rng rng(9);
  for (int trial = 0; trial < 200; ++trial) {
    RandomDictOptions opts;
    opts.max_len = 5;
    opts.gapless_rate = 0.2;
    auto d = random_dictionary(rng, GapRegime::kUniform, opts);
    auto s = compute_stats(d);
    Automaton a(d);
    std::int64_t best = 0;
    for (std::size_t st = 0; st < a.state_count(); ++st) {
      best = std::max<std::int64_t>(best, a.chain_length(static_cast<Automaton::State>(st)));
    }
    EXPECT_EQ(s.lsc, best);
  }
}

TEST(IndexSubpatterns, SharedVertices) {
  auto idx = index_subpatterns(parse_dictionary("ab{0,1}cd\nab{2,3}ef\nx\n"));
  EXPECT_EQ(idx.left.size(), 1u);
  EXPECT_EQ(idx.right.size(), 2u);
  EXPECT_EQ(idx.gapless, std::vector<std::int32_t>{2});
  EXPECT_EQ(idx.pattern_left[2], -1);
}

}  // namespace
}  // namespace gapmatch
