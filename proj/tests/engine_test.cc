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

#include "gapmatch/engine.h"

#include <gtest/gtest.h>

#include <set>
#include <utility>

#include "gapmatch/families.h"
#include "gapmatch/oracle.h"
#include "test_support.h"

namespace gapmatch {
namespace {

using testing::run;

Occurrence occ(std::int32_t pattern, std::int64_t end) { return {pattern, end, std::nullopt}; }
Occurrence occ(std::int32_t pattern, std::int64_t end, std::int64_t j) { return {pattern, end, j}; }

TEST(Matcher, ZeroGap) {
  EXPECT_EQ(run("ab{0,2}cd", "abcd", EngineKind::kOrientation, ReportMode::kWitness),
            std::vector<Occurrence>{occ(0, 4, 2)});
  EXPECT_EQ(run("ab{0,2}cd", "abcd"), std::vector<Occurrence>{occ(0, 4)});
}

TEST(Matcher, GapBelowLowerBound) {
  EXPECT_TRUE(run("ab{1,2}cd", "abcd").empty());
  EXPECT_EQ(run("ab{1,2}cd", "abxcd", EngineKind::kOrientation, ReportMode::kWitness),
            std::vector<Occurrence>{occ(0, 5, 2)});
}

TEST(Matcher, NoOverlap) {
  EXPECT_EQ(run("a{0,1}ba", "aba", EngineKind::kOrientation, ReportMode::kWitness),
            std::vector<Occurrence>{occ(0, 3, 1)});
}

TEST(Matcher, UnboundedWitnesses) {
  EXPECT_EQ(run("a{*}a", "aaa"), (std::vector<Occurrence>{occ(0, 2), occ(0, 3)}));
  EXPECT_EQ(run("a{*}a", "aaa", EngineKind::kOrientation, ReportMode::kWitness),
            (std::vector<Occurrence>{occ(0, 2, 1), occ(0, 3, 1), occ(0, 3, 2)}));
}

TEST(Matcher, GaplessPatterns) {
  auto got = run("ab\nb\nx{*}y", "abxy");
  EXPECT_EQ(got, (std::vector<Occurrence>{occ(0, 2), occ(1, 2), occ(2, 4)}));
}

TEST(Matcher, EmptyAndShortTexts) {
  EXPECT_TRUE(run("ab{0,2}cd", "").empty());
  EXPECT_TRUE(run("ab{0,2}cdef", "abc").empty());
  EXPECT_TRUE(run("", "abc").empty());
}

TEST(Matcher, DuplicatePatternsKeepIds) {
  EXPECT_EQ(run("a{0,0}b\na{0,0}b", "ab"), (std::vector<Occurrence>{occ(0, 2), occ(1, 2)}));
}

TEST(Matcher, HorizonLimit) {
  auto dict = compile(parse_dictionary("a{0,1000}b"));
  EngineConfig c;
  c.max_horizon = 100;
  EXPECT_THROW(Matcher(dict, c), EngineError);
}

TEST(Matcher, StepOutputIsPerPosition) {
  auto dict = compile(parse_dictionary("a{*}b\nb{0,3}a\naa"));
  Matcher m(dict, testing::config(EngineKind::kOrientation, ReportMode::kWitness));
  const std::string text = "abaabbaab";
  auto expect = oracle_dmog(dict->patterns, text, ReportMode::kWitness);
  std::size_t k = 0;
  for (char c : text) {
    auto out = m.step(static_cast<unsigned char>(c));
    for (const auto& o : out) {
      ASSERT_LT(k, expect.size());
      EXPECT_EQ(o, expect[k++]);
      EXPECT_EQ(o.end, m.position());
    }
  }
  EXPECT_EQ(k, expect.size());
}

TEST(Parsing, EngineNames) {
  EXPECT_EQ(parse_engine_kind("threshold"), EngineKind::kThreshold);
  EXPECT_EQ(engine_name(EngineKind::kOrientation), "orientation");
  EXPECT_THROW(parse_engine_kind("fast"), std::invalid_argument);
  EXPECT_EQ(format_occurrence(occ(3, 10, 7)), "10\t3\t7");
  EXPECT_EQ(format_occurrence(occ(3, 10)), "10\t3");
}

void check_witness_validity(const std::vector<GappedPattern>& d, const std::vector<Occurrence>& out) {
  for (const auto& o : out) {
    const auto& p = d[o.pattern];
    if (p.gapless()) continue;
    ASSERT_TRUE(o.witness.has_value());
    std::int64_t g = o.end - static_cast<std::int64_t>(p.second.size()) - *o.witness;
    ASSERT_GE(*o.witness, static_cast<std::int64_t>(p.first.size()));
    ASSERT_GE(g, p.bounds ? p.bounds->alpha : 0);
    if (p.bounds) {
      ASSERT_LE(g, p.bounds->beta);
    }
  }
}

class OracleEquivalence : public ::testing::TestWithParam<std::pair<GapRegime, ReportMode>> {};

TEST_P(OracleEquivalence, RandomInstances) {
  auto [regime, mode] = GetParam();
  Rng rng(100 + static_cast<int>(regime) * 10 + static_cast<int>(mode));
  for (int trial = 0; trial < 150; ++trial) {
    RandomDictOptions opts;
    if (trial % 3 == 1) opts.pool = 3;
    if (regime == GapRegime::kNonUniform && trial % 2 == 0) opts.unbounded_rate = 0.3;
    auto patterns = random_dictionary(rng, regime, opts);
    auto text = random_text(rng, 1 + rng() % 500, "abc");
    auto dict = compile(patterns);
    auto expect = oracle_dmog(patterns, text, mode);
    for (auto kind : {EngineKind::kOrientation, EngineKind::kThreshold}) {
      auto got = match_all(dict, text, testing::config(kind, mode));
      ASSERT_EQ(got, expect) << "trial " << trial << " engine " << engine_name(kind);
    }
    if (mode == ReportMode::kWitness) check_witness_validity(patterns, expect);
    if (mode == ReportMode::kDedup) {
      std::set<std::pair<std::int32_t, std::int64_t>> seen;
      for (const auto& o : expect) ASSERT_TRUE(seen.emplace(o.pattern, o.end).second);
    }
  }
}

INSTANTIATE_TEST_SUITE_P(
    Regimes, OracleEquivalence,
    ::testing::Values(std::pair{GapRegime::kUnbounded, ReportMode::kDedup},
                      std::pair{GapRegime::kUnbounded, ReportMode::kWitness},
                      std::pair{GapRegime::kUniform, ReportMode::kDedup},
                      std::pair{GapRegime::kUniform, ReportMode::kWitness},
                      std::pair{GapRegime::kNonUniform, ReportMode::kDedup},
                      std::pair{GapRegime::kNonUniform, ReportMode::kWitness}));

TEST(Counters, WorkBoundedByDegeneracyShape) {
  // One engine step costs a constant times lsc * delta plus the output.
  Rng rng(77);
  double worst = 0;
  for (int trial = 0; trial < 60; ++trial) {
    auto patterns = random_dictionary(rng, GapRegime::kUniform, {});
    auto dict = compile(patterns);
    Matcher m(dict);
    auto text = random_text(rng, 400, "abc");
    const double base = static_cast<double>(std::max<std::int64_t>(dict->stats.lsc, 1) *
                                            std::max(dict->degeneracy.degeneracy, 1));
    std::uint64_t work = 0, out = 0;
    for (char c : text) {
      out += m.step(static_cast<unsigned char>(c)).size();
      work += m.last_work();
    }
    worst = std::max(worst, static_cast<double>(work) / (base * 400.0 + static_cast<double>(out)));
  }
  EXPECT_LT(worst, 16.0);
}

TEST(Counters, SpaceIncludesDictionary) {
  auto dict = compile(parse_dictionary("ab{1,4}cd\nab"));
  Matcher m(dict);
  EXPECT_GE(m.space_units(), dict->stats.total_len);
  EXPECT_EQ(m.special_vertices(), 0);
}

}  // namespace
}  // namespace gapmatch
