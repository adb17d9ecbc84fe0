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

#include <algorithm>
#include <charconv>
#include <iterator>
#include <limits>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace gapmatch {

ParseError::ParseError(std::size_t line, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message),
      line_(line) {}

namespace {

// Reads a subpattern up to an unescaped '{' or the end of input.
std::string read_subpattern(std::string_view line, std::size_t& pos,
                            std::size_t line_number) {
  std::string out;
  while (pos < line.size()) {
    char c = line[pos];
    if (c == '{') break;
    if (c == '}') throw ParseError(line_number, "unescaped '}'");
    if (c == '\\') {
      if (pos + 1 >= line.size()) {
        throw ParseError(line_number, "dangling escape at end of line");
      }
      char e = line[pos + 1];
      if (e != '{' && e != '}' && e != '\\') {
        throw ParseError(line_number,
                         std::string("unknown escape '\\") + e + "'");
      }
      out.push_back(e);
      pos += 2;
      continue;
    }
    out.push_back(c);
    ++pos;
  }
  return out;
}

std::int64_t read_int(std::string_view text, std::size_t line_number) {
  if (text.empty()) throw ParseError(line_number, "missing gap bound");
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec == std::errc::result_out_of_range) {
    throw ParseError(line_number, "gap bound out of range");
  }
  if (ec != std::errc() || ptr != text.data() + text.size() || value < 0) {
    throw ParseError(line_number,
                     "malformed gap bound '" + std::string(text) + "'");
  }
  return value;
}

bool is_blank(std::string_view line) {
  return line.find_first_not_of(" \t") == std::string_view::npos;
}

bool is_comment(std::string_view line) {
  auto p = line.find_first_not_of(" \t");
  return p != std::string_view::npos && line[p] == '#';
}

void append_escaped(std::string& out, std::string_view s) {
  for (char c : s) {
    if (c == '{' || c == '}' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
}

}  // namespace

GappedPattern parse_pattern(std::string_view line, std::int32_t id,
                            std::size_t line_number) {
  GappedPattern p;
  p.id = id;
  std::size_t pos = 0;
  p.first = read_subpattern(line, pos, line_number);
  if (p.first.empty()) throw ParseError(line_number, "empty first subpattern");
  if (pos == line.size()) return p;

  // pos sits on '{'.
  auto close = line.find('}', pos);
  if (close == std::string_view::npos) {
    throw ParseError(line_number, "unterminated gap");
  }
  std::string_view body = line.substr(pos + 1, close - pos - 1);
  if (body == "*") {
    p.bounds.reset();
  } else {
    auto comma = body.find(',');
    if (comma == std::string_view::npos) {
      throw ParseError(line_number, "malformed gap '{" + std::string(body) + "}'");
    }
    GapBounds b{read_int(body.substr(0, comma), line_number),
                read_int(body.substr(comma + 1), line_number)};
    if (b.beta < b.alpha) {
      throw ParseError(line_number, "gap upper bound below lower bound");
    }
    p.bounds = b;
  }
  pos = close + 1;
  p.second = read_subpattern(line, pos, line_number);
  if (pos != line.size()) throw ParseError(line_number, "more than one gap");
  if (p.second.empty()) throw ParseError(line_number, "empty second subpattern");
  return p;
}

std::vector<GappedPattern> parse_dictionary(std::string_view source) {
  std::vector<GappedPattern> out;
  std::size_t line_number = 0;
  while (!source.empty()) {
    ++line_number;
    auto nl = source.find('\n');
    std::string_view line = source.substr(0, nl);
    source = nl == std::string_view::npos ? std::string_view{} : source.substr(nl + 1);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (is_blank(line) || is_comment(line)) continue;
    out.push_back(parse_pattern(line, static_cast<std::int32_t>(out.size()),
                                line_number));
  }
  return out;
}

std::vector<GappedPattern> parse_dictionary(std::istream& in) {
  std::string text{std::istreambuf_iterator<char>(in),
                   std::istreambuf_iterator<char>()};
  return parse_dictionary(std::string_view(text));
}

std::string render_pattern(const GappedPattern& pattern) {
  std::string out;
  append_escaped(out, pattern.first);
  if (pattern.gapless()) return out;
  if (pattern.bounds) {
    out += '{';
    out += std::to_string(pattern.bounds->alpha);
    out += ',';
    out += std::to_string(pattern.bounds->beta);
    out += '}';
  } else {
    out += "{*}";
  }
  append_escaped(out, pattern.second);
  return out;
}

std::string_view regime_name(GapRegime regime) {
  switch (regime) {
    case GapRegime::kUnbounded: return "unbounded";
    case GapRegime::kUniform: return "uniform";
    case GapRegime::kNonUniform: return "nonuniform";
  }
  return "unknown";
}

DictionaryStats compute_stats(std::span<const GappedPattern> patterns) {
  DictionaryStats s;
  std::unordered_set<std::string_view> subpatterns;
  bool any_bounded = false;
  bool uniform = true;
  GapBounds common{};
  s.alpha_star = std::numeric_limits<std::int64_t>::max();
  s.beta_star = 0;
  for (const auto& p : patterns) {
    subpatterns.insert(p.first);
    s.total_len += static_cast<std::int64_t>(p.first.size() + p.second.size());
    if (p.gapless()) {
      ++s.gapless;
      continue;
    }
    ++s.d;
    subpatterns.insert(p.second);
    s.max_second = std::max<std::int64_t>(s.max_second, p.second.size());
    if (!p.bounds) {
      s.has_unbounded = true;
      continue;
    }
    if (!any_bounded) {
      common = *p.bounds;
      any_bounded = true;
    } else if (!(common == *p.bounds)) {
      uniform = false;
    }
    s.alpha_star = std::min(s.alpha_star, p.bounds->alpha);
    s.beta_star = std::max(s.beta_star, p.bounds->beta);
  }
  if (!any_bounded) s.alpha_star = 0;

  if (!any_bounded) {
    s.regime = GapRegime::kUnbounded;
  } else if (!s.has_unbounded && uniform) {
    s.regime = GapRegime::kUniform;
  } else {
    s.regime = GapRegime::kNonUniform;
  }

  // Every dictionary subpattern that is a suffix of w lies on one chain, so
  // the longest chain ending at w is the number of such suffixes.
  for (std::string_view w : subpatterns) {
    std::int64_t chain = 0;
    for (std::size_t k = 0; k < w.size(); ++k) {
      if (subpatterns.contains(w.substr(k))) ++chain;
    }
    s.lsc = std::max(s.lsc, chain);
  }
  return s;
}

SubpatternIndex index_subpatterns(std::span<const GappedPattern> patterns) {
  SubpatternIndex idx;
  std::unordered_map<std::string, std::int32_t> left_ids;
  std::unordered_map<std::string, std::int32_t> right_ids;
  idx.pattern_left.assign(patterns.size(), -1);
  idx.pattern_right.assign(patterns.size(), -1);
  for (std::size_t i = 0; i < patterns.size(); ++i) {
    const auto& p = patterns[i];
    if (p.id != static_cast<std::int32_t>(i)) {
      throw std::invalid_argument("pattern ids must equal their position");
    }
    if (p.gapless()) {
      idx.gapless.push_back(p.id);
      continue;
    }
    auto [l, l_new] = left_ids.try_emplace(p.first, static_cast<std::int32_t>(idx.left.size()));
    if (l_new) idx.left.push_back(p.first);
    auto [r, r_new] = right_ids.try_emplace(p.second, static_cast<std::int32_t>(idx.right.size()));
    if (r_new) idx.right.push_back(p.second);
    idx.pattern_left[i] = l->second;
    idx.pattern_right[i] = r->second;
  }
  return idx;
}

}  // namespace gapmatch
