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

// Aho-Corasick automaton over the distinct subpatterns of a dictionary.
//
// Each step reports which left/right subpattern vertices end at the current
// text position. Vertices on one side are listed deepest first; the chain is
// precomputed per state so an event costs O(number of arrivals).

#ifndef GAPMATCH_AUTOMATON_H_
#define GAPMATCH_AUTOMATON_H_

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "gapmatch/dictionary.h"

namespace gapmatch {

struct Arrival {
  std::int32_t vertex = 0;
  std::int32_t length = 0;

  friend bool operator==(const Arrival&, const Arrival&) = default;
};

struct ArrivalEvent {
  std::int64_t position = 0;
  std::vector<Arrival> r_arrivals;
  std::vector<Arrival> l_arrivals;
  std::vector<std::int32_t> complete;  // gapless patterns ending here

  void clear() {
    r_arrivals.clear();
    l_arrivals.clear();
    complete.clear();
  }
};

// Tree over left vertices ordered by the proper-suffix relation. Nodes
// [0, num_left) are left vertices; node `root` is the empty string.
struct SuffixTree {
  std::int32_t root = 0;
  std::vector<std::int32_t> parent;  // parent[root] == -1
  std::vector<std::int32_t> depth;   // depth[root] == 0
  std::vector<std::vector<std::int32_t>> children;

  std::int32_t size() const { return static_cast<std::int32_t>(parent.size()); }
};

class Automaton {
 public:
  using State = std::int32_t;
  static constexpr std::size_t kDefaultDenseThreshold = 8192;

  explicit Automaton(std::span<const GappedPattern> patterns,
                     std::size_t dense_threshold = kDefaultDenseThreshold);

  State root() const { return 0; }
  State next(State s, unsigned char c) const;

  // Fills `event` with everything ending at `s`; does not touch position.
  void collect(State s, ArrivalEvent& event) const;

  std::pair<State, ArrivalEvent> step(State s, unsigned char c,
                                      std::int64_t position) const;

  // Deepest left vertex ending at state s, or -1. Its ancestors in the
  // suffix tree are exactly the other left vertices ending at s.
  std::int32_t deepest_left(State s) const { return deepest_left_[s]; }
  std::int32_t left_parent(std::int32_t u) const { return left_parent_[u]; }
  std::int32_t left_length(std::int32_t u) const { return left_length_[u]; }
  std::int32_t right_length(std::int32_t v) const { return right_length_[v]; }

  template <class F>
  void for_each_left(State s, F&& f) const {
    for (std::int32_t u = deepest_left_[s]; u >= 0; u = left_parent_[u]) f(u);
  }

  // Number of dictionary subpatterns on the suffix-link chain of s.
  std::int32_t chain_length(State s) const { return chain_length_[s]; }

  SuffixTree build_suffix_tree() const;

  const SubpatternIndex& index() const { return index_; }
  std::size_t state_count() const { return fail_.size(); }
  bool dense() const { return !delta_.empty() || fail_.size() <= 1; }
  std::int32_t num_left() const { return static_cast<std::int32_t>(index_.left.size()); }
  std::int32_t num_right() const { return static_cast<std::int32_t>(index_.right.size()); }

 private:
  struct Edge {
    unsigned char c;
    State to;
  };

  State child(State s, unsigned char c) const;

  SubpatternIndex index_;
  std::vector<std::vector<Edge>> goto_;  // sorted by c
  std::vector<State> fail_;
  std::vector<State> delta_;             // dense transitions, empty if sparse

  std::vector<std::int32_t> deepest_left_;
  std::vector<std::int32_t> deepest_right_;
  std::vector<std::int32_t> deepest_complete_;  // keyword state with gapless patterns
  std::vector<std::int32_t> complete_next_;     // per state, next such state on chain
  std::vector<std::vector<std::int32_t>> complete_patterns_;  // per state
  std::vector<std::int32_t> chain_length_;

  std::vector<std::int32_t> left_parent_;
  std::vector<std::int32_t> right_parent_;
  std::vector<std::int32_t> left_length_;
  std::vector<std::int32_t> right_length_;
};

// Per-stream position over an automaton.
class AutomatonCursor {
 public:
  explicit AutomatonCursor(const Automaton& automaton)
      : automaton_(&automaton), state_(automaton.root()) {}

  const ArrivalEvent& step(unsigned char c);
  Automaton::State state() const { return state_; }
  std::int64_t position() const { return position_; }

 private:
  const Automaton* automaton_;
  Automaton::State state_;
  std::int64_t position_ = 0;
  ArrivalEvent event_;
};

}  // namespace gapmatch

#endif  // GAPMATCH_AUTOMATON_H_
