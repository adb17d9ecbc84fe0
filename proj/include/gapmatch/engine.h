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

// Streaming matcher for dictionaries of one-gap patterns.
//
// A pattern p1{a,b}p2 occurs ending at i with witness j when p1 ends at j,
// p2 ends at i and the gap i - |p2| - j lies in [a, b] ({*} means >= 0).
// The matcher consumes one byte per step and returns every occurrence ending
// at the current position before the next byte is read.
//
// Two engines share this interface. kOrientation routes every pattern
// through a degeneracy orientation of the dictionary graph. kThreshold
// orients only edges touching a light vertex and handles heavy-heavy edges
// with ancestor arrays over the suffix tree of first subpatterns.

#ifndef GAPMATCH_ENGINE_H_
#define GAPMATCH_ENGINE_H_

#include <compare>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "gapmatch/automaton.h"
#include "gapmatch/dictionary.h"
#include "gapmatch/graph.h"

namespace gapmatch {

enum class EngineKind { kOrientation, kThreshold };
enum class ReportMode { kDedup, kWitness };

std::string_view engine_name(EngineKind kind);
EngineKind parse_engine_kind(std::string_view name);

struct EngineConfig {
  EngineKind kind = EngineKind::kOrientation;
  ReportMode mode = ReportMode::kDedup;
  // Largest beta* - alpha* accepted by the heavy-heavy window arrays.
  std::int64_t max_window_span = std::int64_t{1} << 16;
  // Largest history (beta + M) kept per stream.
  std::int64_t max_horizon = std::int64_t{1} << 26;
};

// Raised when a dictionary cannot be run under the given configuration.
class EngineError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Occurrence {
  std::int32_t pattern = 0;
  std::int64_t end = 0;                 // 1-based end of p2
  std::optional<std::int64_t> witness;  // 1-based end of p1 (witness mode)

  friend auto operator<=>(const Occurrence&, const Occurrence&) = default;
};

std::string format_occurrence(const Occurrence& occ);

// Everything derived from the dictionary alone; shared by all streams.
struct CompiledDictionary {
  std::vector<GappedPattern> patterns;
  DictionaryStats stats;
  Automaton automaton;
  DictGraph graph;
  DegeneracyResult degeneracy;
  HeavyLightSplit split;
  Orientation light_orientation;
  SuffixTree tree;

  explicit CompiledDictionary(std::vector<GappedPattern> patterns);
};

std::shared_ptr<const CompiledDictionary> compile(std::vector<GappedPattern> patterns);

struct EngineParts;

class Matcher {
 public:
  Matcher(std::shared_ptr<const CompiledDictionary> dictionary, EngineConfig config = {});
  ~Matcher();
  Matcher(Matcher&&) noexcept;
  Matcher& operator=(Matcher&&) noexcept;

  // Consumes one byte; the result is sorted by (pattern, witness) and stays
  // valid until the next call.
  std::span<const Occurrence> step(unsigned char c);

  std::int64_t position() const { return position_; }
  // Work units spent by the last step.
  std::uint64_t last_work() const { return last_work_; }
  // Words of per-stream state currently held, plus the dictionary size.
  std::int64_t space_units() const;

  const CompiledDictionary& dictionary() const { return *dict_; }
  const EngineConfig& config() const { return config_; }

  // Heavy-side introspection (zero for the orientation engine).
  std::int32_t special_vertices() const;
  std::int64_t resident_arrays() const;

 private:
  std::shared_ptr<const CompiledDictionary> dict_;
  EngineConfig config_;
  std::unique_ptr<EngineParts> parts_;
  Automaton::State state_;
  std::int64_t position_ = 0;
  std::uint64_t last_work_ = 0;
  std::vector<Occurrence> out_;
};

// Runs a whole text, calling `sink` once per position that has output.
void run_text(Matcher& matcher, std::string_view text,
              const std::function<void(std::span<const Occurrence>)>& sink);

std::vector<Occurrence> match_all(std::shared_ptr<const CompiledDictionary> dictionary,
                                  std::string_view text, EngineConfig config = {});

}  // namespace gapmatch

#endif  // GAPMATCH_ENGINE_H_
