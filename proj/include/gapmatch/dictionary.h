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

// Dictionary of one-gap patterns: parsing, rendering, and the structural
// statistics the matching engines are parameterized by.
//
// A pattern is written `first{alpha,beta}second`, `first{*}second`, or just
// `first` (gapless). An occurrence ending at text position i pairs an
// occurrence of `first` ending at j with an occurrence of `second` ending at
// i, where the gap g = i - |second| - j satisfies alpha <= g <= beta
// (unbounded: g >= 0). Positions are 1-based.

#ifndef GAPMATCH_DICTIONARY_H_
#define GAPMATCH_DICTIONARY_H_

#include <cstdint>
#include <istream>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace gapmatch {

struct GapBounds {
  std::int64_t alpha = 0;
  std::int64_t beta = 0;

  friend bool operator==(const GapBounds&, const GapBounds&) = default;
};

struct GappedPattern {
  std::int32_t id = 0;
  std::string first;
  std::string second;                // empty => gapless
  std::optional<GapBounds> bounds;   // nullopt => unbounded gap

  bool gapless() const { return second.empty(); }
  bool bounded() const { return !gapless() && bounds.has_value(); }

  friend bool operator==(const GappedPattern&, const GappedPattern&) = default;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& message);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Parses a single pattern line (no comment handling). Throws ParseError
// tagged with `line_number`.
GappedPattern parse_pattern(std::string_view line, std::int32_t id,
                            std::size_t line_number = 1);

// Parses a whole dictionary. Blank lines and lines whose first non-blank
// character is '#' are skipped; ids follow the order of pattern lines.
std::vector<GappedPattern> parse_dictionary(std::string_view source);
std::vector<GappedPattern> parse_dictionary(std::istream& in);

// Canonical textual form; parse_pattern(render_pattern(p)) == p.
std::string render_pattern(const GappedPattern& pattern);

enum class GapRegime { kUnbounded, kUniform, kNonUniform };

std::string_view regime_name(GapRegime regime);

struct DictionaryStats {
  std::int64_t d = 0;            // gapped patterns
  std::int64_t gapless = 0;      // gapless patterns
  std::int64_t total_len = 0;    // sum of all subpattern lengths
  std::int64_t lsc = 0;          // longest suffix chain, counted in vertices
  std::int64_t max_second = 0;   // M
  std::int64_t alpha_star = 0;   // min alpha over bounded gaps
  std::int64_t beta_star = 0;    // max beta over bounded gaps
  bool has_unbounded = false;
  GapRegime regime = GapRegime::kUnbounded;
};

DictionaryStats compute_stats(std::span<const GappedPattern> patterns);

// Distinct subpattern strings per side. Left vertices are distinct first
// subpatterns of gapped patterns, right vertices distinct second
// subpatterns; both are numbered by first appearance.
struct SubpatternIndex {
  std::vector<std::string> left;
  std::vector<std::string> right;
  std::vector<std::int32_t> pattern_left;   // -1 for gapless patterns
  std::vector<std::int32_t> pattern_right;  // -1 for gapless patterns
  std::vector<std::int32_t> gapless;        // pattern ids
};

SubpatternIndex index_subpatterns(std::span<const GappedPattern> patterns);

}  // namespace gapmatch

#endif  // GAPMATCH_DICTIONARY_H_
