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

// Building blocks of the matcher. Each part owns a subset of the dictionary
// edges, grouped by (left, right, bounds, responsible side), and reacts to
// left-vertex arrivals, window activations/expiries and right-vertex
// arrivals. All parts read arrival times from one shared TimeStore.

#ifndef GAPMATCH_SRC_ENGINE_PARTS_H_
#define GAPMATCH_SRC_ENGINE_PARTS_H_

#include <algorithm>
#include <bit>
#include <cstdint>
#include <deque>
#include <functional>
#include <limits>
#include <span>
#include <vector>

#include "gapmatch/engine.h"
#include "gapmatch/lists.h"
#include "gapmatch/stabbing.h"
#include "gapmatch/tree_arrays.h"

namespace gapmatch::detail {

inline constexpr std::int64_t kNoBound = std::numeric_limits<std::int64_t>::max();

// Collects the output of one position.
struct Sink {
  ReportMode mode = ReportMode::kDedup;
  std::int64_t position = 0;
  std::vector<Occurrence>* out = nullptr;
  std::uint64_t* work = nullptr;

  void emit(std::span<const std::int32_t> patterns) {
    for (std::int32_t p : patterns) out->push_back({p, position, std::nullopt});
    *work += patterns.size();
  }
  void emit(std::span<const std::int32_t> patterns, std::int64_t witness) {
    for (std::int32_t p : patterns) out->push_back({p, position, witness});
    *work += patterns.size();
  }
  bool witness() const { return mode == ReportMode::kWitness; }
};

// Arrival times of left vertices.
struct TimeStore {
  std::vector<std::int64_t> first;                 // 0 until the first arrival
  std::vector<std::vector<std::int64_t>> history;  // every arrival, if kept
  std::vector<std::deque<std::int64_t>> window;    // activated, not yet expired
  bool keep_history = false;
  std::int64_t held = 0;

  explicit TimeStore(std::int32_t num_left = 0)
      : first(num_left, 0), history(num_left), window(num_left) {}

  bool any_in(std::int32_t u, std::int64_t lo, std::int64_t hi, std::uint64_t& work) const {
    const auto& w = window[u];
    auto it = std::lower_bound(w.begin(), w.end(), lo);
    work += 1 + static_cast<std::uint64_t>(std::bit_width(w.size()));
    return it != w.end() && *it <= hi;
  }

  template <class F>
  void each_in(std::int32_t u, std::int64_t lo, std::int64_t hi, std::uint64_t& work,
               F&& f) const {
    const auto& w = window[u];
    auto it = std::lower_bound(w.begin(), w.end(), lo);
    work += 1 + static_cast<std::uint64_t>(std::bit_width(w.size()));
    for (; it != w.end() && *it <= hi; ++it) f(*it);
  }
};

struct EdgeGroup {
  std::int32_t left = 0;
  std::int32_t right = 0;
  bool left_responsible = true;
  std::int64_t alpha = 0;
  std::int64_t beta = kNoBound;  // kNoBound for unbounded gaps
  std::vector<std::int32_t> patterns;
};

// Groups parallel edges that share bounds and responsible side.
std::vector<EdgeGroup> make_groups(const DictGraph& graph, std::span<const std::int32_t> edges,
                                   const std::function<bool(std::int32_t)>& left_responsible);

// Per-side indexes of a group list.
struct GroupIndex {
  std::vector<std::vector<std::int32_t>> by_left;   // left-responsible groups
  std::vector<std::vector<std::int32_t>> by_right;  // right-responsible groups

  GroupIndex(const std::vector<EdgeGroup>& groups, std::int32_t num_left,
             std::int32_t num_right);
};

// Unbounded gaps: a left vertex joins the lists of its assigned neighbours at
// its first arrival and never leaves.
class UnboundedPart {
 public:
  UnboundedPart(std::vector<EdgeGroup> groups, std::int32_t num_left, std::int32_t num_right);

  void on_first_arrival(std::int32_t u, std::int64_t t, std::uint64_t& work);
  void report(std::int32_t v, std::int32_t m_v, const TimeStore& store, Sink& sink);

  std::int64_t linked() const { return lists_.linked_count(); }
  bool empty() const { return groups_.empty(); }

 private:
  void emit(const EdgeGroup& g, std::int64_t hi, const TimeStore& store, Sink& sink);

  std::vector<EdgeGroup> groups_;
  GroupIndex index_;
  ReportingLists lists_;
};

// A single window [alpha, beta] for every edge. Left vertices are pushed to
// the front of their lists alpha steps after arriving, so every list is
// ordered by latest activation time.
class UniformPart {
 public:
  UniformPart(std::vector<EdgeGroup> groups, std::int32_t num_left, std::int32_t num_right,
              std::int64_t alpha, std::int64_t beta);

  void on_activate(std::int32_t u, std::int64_t t, std::uint64_t& work);
  void on_window_empty(std::int32_t u, std::uint64_t& work);
  void report(std::int32_t v, std::int32_t m_v, const TimeStore& store, Sink& sink);

  std::int64_t linked() const { return lists_.linked_count(); }
  bool empty() const { return groups_.empty(); }

 private:
  void emit(const EdgeGroup& g, std::int64_t lo, std::int64_t hi, bool known_valid,
            const TimeStore& store, Sink& sink);

  std::vector<EdgeGroup> groups_;
  GroupIndex index_;
  ReportingLists lists_;
  std::int64_t alpha_;
  std::int64_t beta_;
};

// Per-edge windows. Each arrival of a left vertex inserts one interval of
// report positions per responsible edge into the right vertex's set.
class IntervalPart {
 public:
  IntervalPart(std::vector<EdgeGroup> groups, std::int32_t num_left, std::int32_t num_right,
               std::vector<std::int32_t> right_length, std::int64_t horizon);

  void on_arrival(std::int32_t u, std::int64_t t, std::uint64_t& work);
  void on_expire(std::int64_t t, std::uint64_t& work);
  void report(std::int32_t v, std::int32_t m_v, const TimeStore& store, Sink& sink);

  std::int64_t live_intervals() const { return live_; }
  bool empty() const { return groups_.empty(); }

 private:
  struct Hit {
    std::int32_t group = 0;
    std::int64_t time = 0;
  };
  using Set = IntervalSet<Hit>;

  std::vector<EdgeGroup> groups_;
  GroupIndex index_;
  std::vector<std::int32_t> right_length_;
  std::vector<Set> sets_;
  PositionRing<std::vector<std::pair<std::int32_t, Set::Key>>> created_;
  std::vector<std::int64_t> stamp_;
  std::int64_t live_ = 0;
};

// Heavy-heavy edges sharing one window (or all unbounded). The deepest left
// arrival splices, for every heavy right slot, the chain of edges from its
// suffix-tree ancestors into that slot's list.
class HeavyChainPart {
 public:
  HeavyChainPart(std::vector<EdgeGroup> groups, const SuffixTree& tree, std::int32_t num_right,
                 std::int64_t threshold, bool bounded, std::int64_t alpha, std::int64_t beta,
                 std::int64_t max_second);

  // Bounded: called at activation time with the arrival time t.
  // Unbounded: called at arrival; only the first call per vertex splices.
  void splice(std::int32_t u, std::int64_t t, std::int64_t now, std::uint64_t& work);
  void on_deadlines(std::int64_t now, std::uint64_t& work);
  void report(std::int32_t v, std::int32_t m_v, const TimeStore& store, Sink& sink);

  const AncestorHeads& heads() const { return heads_; }
  std::int64_t linked() const { return lists_.linked_count(); }
  std::int64_t pending_deadlines() const { return static_cast<std::int64_t>(deadlines_.size()); }
  bool empty() const { return groups_.empty(); }

 private:
  std::vector<EdgeGroup> groups_;
  std::vector<std::int32_t> slot_of_;  // right vertex -> slot, or -1
  std::vector<std::int32_t> next_;     // per group
  AncestorHeads heads_;
  ReportingLists lists_;
  std::vector<std::int64_t> stamp_;
  std::vector<std::int64_t> last_splice_;
  std::deque<std::pair<std::int64_t, std::int32_t>> deadlines_;  // (splice time, u)
  std::vector<std::int32_t> scratch_;
  bool bounded_;
  std::int64_t alpha_;
  std::int64_t beta_;
  std::int64_t delay_;  // splice time + delay_ = unsplice deadline
};

// Heavy-heavy edges with per-edge windows. Every (slot, gap) pair has its own
// ancestor chain; an arrival drops each chain head into the cyclic bucket of
// the position where it becomes reportable.
class ActiveWindowPart {
 public:
  ActiveWindowPart(std::vector<EdgeGroup> groups, const SuffixTree& tree,
                   std::vector<std::int32_t> right_length, std::int64_t threshold_base,
                   std::int64_t alpha_star, std::int64_t max_second, std::int64_t max_span);

  // Called alpha_star steps after u arrived at t.
  void activate(std::int32_t u, std::int64_t t, std::uint64_t& work);
  void report(std::int32_t v, Sink& sink);

  const AncestorHeads& heads() const { return heads_; }
  std::int64_t span() const { return span_; }
  std::int64_t slots() const { return rho_; }
  std::int64_t bucket_entries() const { return held_; }
  bool empty() const { return groups_.empty(); }

 private:
  struct Due {
    std::int32_t head = 0;
    std::int32_t gap = 0;
    std::int64_t time = 0;  // arrival of the left vertex (the witness)
  };

  std::vector<EdgeGroup> groups_;
  std::vector<std::int32_t> right_length_;
  std::vector<std::int32_t> slot_of_;
  std::vector<std::int32_t> right_of_slot_;
  std::vector<std::vector<std::int32_t>> next_;  // per group, per gap in [alpha, beta]
  AncestorHeads heads_;
  std::int64_t alpha_star_;
  std::int64_t span_;
  std::int64_t ring_;
  std::int64_t rho_ = 0;
  std::vector<std::vector<Due>> buckets_;
  std::vector<std::int64_t> bucket_time_;
  std::vector<std::int64_t> stamp_;
  std::vector<std::int32_t> scratch_;
  std::int64_t held_ = 0;
};

}  // namespace gapmatch::detail

#endif  // GAPMATCH_SRC_ENGINE_PARTS_H_
