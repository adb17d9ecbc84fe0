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

#include "gapmatch/families.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <set>
#include <stdexcept>

namespace gapmatch {
namespace {

std::int64_t uniform_int(Rng& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

bool coin(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

std::string random_word(Rng& rng, std::int32_t max_len, std::string_view alphabet) {
  // Mostly short words, so that random texts contain matches.
  std::int64_t len = coin(rng, 0.8) ? uniform_int(rng, 1, std::min(3, max_len))
                                     : uniform_int(rng, 1, max_len);
  return random_text(rng, static_cast<std::size_t>(len), alphabet);
}

// Fixed-width code of `value` over the two letters {zero, one}.
std::string code(std::int32_t value, std::int32_t width, char zero, char one) {
  std::string s(width, zero);
  for (std::int32_t b = 0; b < width; ++b) {
    if (value >> b & 1) s[width - 1 - b] = one;
  }
  return s;
}

std::int32_t width_for(std::int32_t count) {
  std::int32_t w = 1;
  while ((1 << w) < count) ++w;
  return w;
}

std::int32_t exact_sqrt(std::int32_t d) {
  auto q = static_cast<std::int32_t>(std::lround(std::sqrt(static_cast<double>(d))));
  if (q * q != d || q % 4 != 0) throw std::invalid_argument("d must be a square of a multiple of 4");
  return q;
}

// q first subpatterns in suffix chains of four and q second subpatterns,
// with no suffix relations across the sides.
std::pair<std::vector<std::string>, std::vector<std::string>> chained_sides(std::int32_t q) {
  std::vector<std::string> left, right;
  const std::int32_t chains = q / 4;
  const std::int32_t w = width_for(chains);
  for (std::int32_t c = 0; c < chains; ++c) {
    std::string tag = "b" + code(c, w, 'b', 'c');
    for (std::int32_t k = 0; k < 4; ++k) left.push_back(std::string(k, 'a') + tag);
  }
  const std::int32_t wr = width_for(q);
  for (std::int32_t r = 0; r < q; ++r) right.push_back("d" + code(r, wr, 'c', 'd'));
  return {left, right};
}

std::string chained_text(Rng& rng, const std::vector<std::string>& left,
                         const std::vector<std::string>& right, std::size_t length) {
  std::string text;
  while (text.size() < length) {
    auto pick = uniform_int(rng, 0, 9);
    if (pick < 4) {
      // Chain heads are every fourth left word.
      text += left[4 * uniform_int(rng, 0, static_cast<std::int64_t>(left.size()) / 4 - 1) + 3];
    } else if (pick < 8) {
      text += right[uniform_int(rng, 0, static_cast<std::int64_t>(right.size()) - 1)];
    } else {
      text += "abcd"[uniform_int(rng, 0, 3)];
    }
  }
  text.resize(length);
  return text;
}

}  // namespace

std::string random_text(Rng& rng, std::size_t length, std::string_view alphabet) {
  std::string s(length, ' ');
  for (auto& c : s) c = alphabet[uniform_int(rng, 0, static_cast<std::int64_t>(alphabet.size()) - 1)];
  return s;
}

std::vector<GappedPattern> random_dictionary(Rng& rng, GapRegime regime,
                                             const RandomDictOptions& o) {
  const auto n = static_cast<std::int32_t>(uniform_int(rng, 1, o.max_patterns));
  std::vector<std::string> first_pool, second_pool;
  for (std::int32_t k = 0; k < o.pool; ++k) {
    first_pool.push_back(random_word(rng, o.max_len, o.alphabet));
    second_pool.push_back(random_word(rng, o.max_len, o.alphabet));
  }
  auto draw = [&](const std::vector<std::string>& pool) {
    if (pool.empty()) return random_word(rng, o.max_len, o.alphabet);
    return pool[uniform_int(rng, 0, static_cast<std::int64_t>(pool.size()) - 1)];
  };
  auto draw_bounds = [&]() {
    std::int64_t a = uniform_int(rng, 0, o.max_alpha);
    return GapBounds{a, a + uniform_int(rng, 0, o.max_span)};
  };
  const GapBounds shared = draw_bounds();

  std::vector<GappedPattern> out;
  for (std::int32_t id = 0; id < n; ++id) {
    GappedPattern p;
    p.id = id;
    p.first = draw(first_pool);
    if (!coin(rng, o.gapless_rate)) {
      p.second = draw(second_pool);
      switch (regime) {
        case GapRegime::kUnbounded:
          break;
        case GapRegime::kUniform:
          p.bounds = shared;
          break;
        case GapRegime::kNonUniform:
          if (!coin(rng, o.unbounded_rate)) p.bounds = draw_bounds();
          break;
      }
    }
    out.push_back(std::move(p));
  }
  return out;
}

std::vector<IsgEdge> random_isg_edges(Rng& rng, std::int32_t n, std::int32_t m, bool bounded,
                                      std::int64_t max_alpha, std::int64_t max_span) {
  std::vector<IsgEdge> edges;
  for (std::int32_t k = 0; k < m; ++k) {
    IsgEdge e;
    e.tail = static_cast<std::int32_t>(uniform_int(rng, 0, n - 1));
    e.head = static_cast<std::int32_t>(uniform_int(rng, 0, n - 1));
    if (bounded) {
      e.alpha = uniform_int(rng, 0, max_alpha);
      e.beta = e.alpha + uniform_int(rng, 0, max_span);
    }
    edges.push_back(e);
  }
  return edges;
}

std::vector<std::pair<std::int32_t, std::int32_t>> random_simple_graph(Rng& rng, std::int32_t n,
                                                                       std::int32_t m) {
  std::set<std::pair<std::int32_t, std::int32_t>> seen;
  std::vector<std::pair<std::int32_t, std::int32_t>> edges;
  if (n < 2) return edges;
  for (std::int32_t k = 0; k < m; ++k) {
    auto a = static_cast<std::int32_t>(uniform_int(rng, 0, n - 1));
    auto b = static_cast<std::int32_t>(uniform_int(rng, 0, n - 1));
    if (a == b || !seen.emplace(std::min(a, b), std::max(a, b)).second) continue;
    edges.emplace_back(a, b);
  }
  return edges;
}

Family orientation_family(std::int32_t delta, std::uint64_t seed, std::size_t text_length) {
  if (delta < 1 || 128 % delta != 0) throw std::invalid_argument("delta must divide 128");
  std::vector<std::string> left, right;
  for (std::int32_t x = 0; x < 256; ++x) {
    std::string s(4, 'a');
    for (std::int32_t k = 0; k < 4; ++k) s[k] = "abcd"[(x >> (2 * (3 - k))) & 3];
    (s[0] == 'a' || s[0] == 'b' ? left : right).push_back(s);
  }
  Family f;
  f.name = "orientation";
  f.size = delta;
  for (std::int32_t block = 0; block < 128 / delta; ++block) {
    for (std::int32_t a = 0; a < delta; ++a) {
      for (std::int32_t b = 0; b < delta; ++b) {
        GappedPattern p;
        p.id = static_cast<std::int32_t>(f.patterns.size());
        p.first = left[block * delta + a];
        p.second = right[block * delta + b];
        p.bounds = GapBounds{0, 2};
        f.patterns.push_back(std::move(p));
      }
    }
  }
  Rng rng(seed);
  f.text = random_text(rng, text_length, "abcd");
  return f;
}

Family threshold_family(std::int32_t d, std::uint64_t seed, std::size_t text_length) {
  const std::int32_t q = exact_sqrt(d);
  auto [left, right] = chained_sides(q);
  Family f;
  f.name = "threshold";
  f.size = d;
  for (const auto& l : left) {
    for (const auto& r : right) {
      f.patterns.push_back({static_cast<std::int32_t>(f.patterns.size()), l, r, GapBounds{0, 3}});
    }
  }
  Rng rng(seed);
  f.text = chained_text(rng, left, right, text_length);
  return f;
}

Family threshold_nonuniform_family(std::int32_t d, std::int64_t span, std::uint64_t seed,
                                   std::size_t text_length) {
  const std::int32_t q = exact_sqrt(d);
  auto [left, right] = chained_sides(q);
  Rng rng(seed);
  Family f;
  f.name = "threshold-nonuniform";
  f.size = d;
  for (const auto& l : left) {
    for (const auto& r : right) {
      std::int64_t a = uniform_int(rng, 0, 2);
      f.patterns.push_back({static_cast<std::int32_t>(f.patterns.size()), l, r,
                            GapBounds{a, a + uniform_int(rng, 0, span - 1)}});
    }
  }
  f.text = chained_text(rng, left, right, text_length);
  return f;
}

Family space_family(std::int64_t alpha, std::int64_t beta, std::uint64_t seed,
                    std::size_t text_length) {
  Rng rng(seed);
  RandomDictOptions o;
  o.max_patterns = 40;
  o.max_len = 4;
  o.gapless_rate = 0.0;
  Family f;
  f.name = "space";
  f.size = beta - alpha;
  while (static_cast<std::int32_t>(f.patterns.size()) < 40) {
    f.patterns = random_dictionary(rng, GapRegime::kUniform, o);
  }
  for (auto& p : f.patterns) p.bounds = GapBounds{alpha, beta};
  f.text = random_text(rng, text_length, "abc");
  return f;
}

std::uint64_t percentile(std::vector<std::uint64_t> sample, double q) {
  if (sample.empty()) return 0;
  std::sort(sample.begin(), sample.end());
  auto rank = static_cast<std::size_t>(std::ceil(q * static_cast<double>(sample.size())));
  rank = std::clamp<std::size_t>(rank, 1, sample.size());
  return sample[rank - 1];
}

FamilyMeasure measure(const Family& family, EngineConfig config, bool sample_space) {
  auto dict = compile(family.patterns);
  FamilyMeasure m;
  m.d = dict->stats.d;
  m.lsc = dict->stats.lsc;
  m.delta = dict->degeneracy.degeneracy;
  m.max_second = dict->stats.max_second;
  Matcher matcher(dict, config);
  std::vector<std::uint64_t> works;
  works.reserve(family.text.size());
  auto start = std::chrono::steady_clock::now();
  for (char c : family.text) {
    auto out = matcher.step(static_cast<unsigned char>(c));
    works.push_back(matcher.last_work());
    m.total_work += matcher.last_work();
    m.total_output += out.size();
    if (sample_space && matcher.position() % 16 == 0) {
      m.max_space = std::max(m.max_space, matcher.space_units());
    }
  }
  m.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (sample_space) m.max_space = std::max(m.max_space, matcher.space_units());
  m.steps = static_cast<std::int64_t>(family.text.size());
  m.work_p50 = percentile(works, 0.50);
  m.work_p90 = percentile(works, 0.90);
  m.work_p99 = percentile(works, 0.99);
  m.work_max = works.empty() ? 0 : *std::max_element(works.begin(), works.end());
  return m;
}

}  // namespace gapmatch
