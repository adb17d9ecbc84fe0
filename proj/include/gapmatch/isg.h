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

// Induced-subgraph engines: a directed (multi)graph is preprocessed, then
// vertices arrive one at a time; after the arrival at position i every edge
// (v_j, v_i) with j < i is reported, optionally restricted to
// alpha <= i - j <= beta (one window for all edges, or one per edge).
//
// Internally each vertex has a tail copy and a head copy. The bipartite
// tail/head graph is given a degeneracy orientation; a tail copy pushes
// itself into the reporting lists of the head copies it is responsible for,
// and a head copy scans the (at most degeneracy many) edges it is
// responsible for itself.

#ifndef GAPMATCH_ISG_H_
#define GAPMATCH_ISG_H_

#include <compare>
#include <cstdint>
#include <deque>
#include <limits>
#include <memory>
#include <vector>

#include "gapmatch/lists.h"
#include "gapmatch/stabbing.h"

namespace gapmatch {

struct IsgEdge {
  std::int32_t tail = 0;
  std::int32_t head = 0;
  std::int64_t alpha = 0;
  std::int64_t beta = std::numeric_limits<std::int64_t>::max();
};

struct IsgReport {
  std::int32_t edge = 0;
  std::int64_t j = 0;  // position of the tail arrival
  std::int64_t i = 0;  // position of the head arrival

  friend auto operator<=>(const IsgReport&, const IsgReport&) = default;
};

class IsgGraph {
 public:
  // Parallel edges with the same tail and head, oriented the same way.
  struct Group {
    std::int32_t tail = 0;
    std::int32_t head = 0;
    bool tail_responsible = true;
    std::vector<std::int32_t> edges;
  };

  IsgGraph(std::int32_t num_vertices, std::vector<IsgEdge> edges);

  std::int32_t num_vertices() const { return n_; }
  const std::vector<IsgEdge>& edges() const { return edges_; }
  std::int32_t degeneracy() const { return degeneracy_; }

  // Edges whose tail copy (resp. head copy) is responsible for them.
  const std::vector<std::int32_t>& tail_assigned(std::int32_t x) const { return tail_assigned_[x]; }
  const std::vector<std::int32_t>& head_assigned(std::int32_t x) const { return head_assigned_[x]; }

  const std::vector<Group>& groups() const { return groups_; }
  const std::vector<std::int32_t>& tail_groups(std::int32_t x) const { return tail_groups_[x]; }
  const std::vector<std::int32_t>& head_groups(std::int32_t x) const { return head_groups_[x]; }

  void check_vertex(std::int32_t x) const;

 private:
  std::int32_t n_;
  std::vector<IsgEdge> edges_;
  std::int32_t degeneracy_ = 0;
  std::vector<std::vector<std::int32_t>> tail_assigned_;
  std::vector<std::vector<std::int32_t>> head_assigned_;
  std::vector<Group> groups_;
  std::vector<std::vector<std::int32_t>> tail_groups_;
  std::vector<std::vector<std::int32_t>> head_groups_;
};

// No window: every earlier tail arrival pairs with a later head arrival.
class UnboundedIsg {
 public:
  explicit UnboundedIsg(std::shared_ptr<const IsgGraph> graph);

  // Head copy arrives: returns the edges (ids) reported.
  std::vector<std::int32_t> arrive_head(std::int32_t v);
  // Tail copy arrives: registers v, reports nothing.
  void arrive_tail(std::int32_t u);
  // Vertex arrival: head copy first, then tail copy.
  std::vector<std::int32_t> step(std::int32_t x);

  // Forgets all arrivals in time proportional to what was touched.
  void reset();

  std::uint64_t last_work() const { return last_work_; }

 private:
  std::shared_ptr<const IsgGraph> graph_;
  std::vector<bool> arrived_;
  std::vector<std::int32_t> touched_;
  ReportingLists lists_;
  std::uint64_t last_work_ = 0;
};

// One window [alpha, beta] for every edge (alpha is raised to 1, since
// an edge needs j < i).
class UniformIsg {
 public:
  UniformIsg(std::shared_ptr<const IsgGraph> graph, std::int64_t alpha, std::int64_t beta);

  std::vector<IsgReport> step(std::int32_t x);

  std::int64_t position() const { return position_; }
  std::uint64_t last_work() const { return last_work_; }
  // Timestamps held plus history slots plus linked entries.
  std::int64_t space_units() const;

 private:
  std::shared_ptr<const IsgGraph> graph_;
  std::int64_t alpha_;
  std::int64_t beta_;
  bool empty_window_;
  std::int64_t position_ = 0;
  PositionRing<std::int32_t> history_;
  std::vector<std::deque<std::int64_t>> times_;
  std::int64_t held_times_ = 0;
  ReportingLists lists_;
  std::uint64_t last_work_ = 0;
};

// Per-edge windows [alpha_e, beta_e]. Tail copies insert one interval per
// responsible edge into the head copy's interval set; head copies scan their
// own responsible edges by binary search over the tail's timestamps.
class NonUniformIsg {
 public:
  explicit NonUniformIsg(std::shared_ptr<const IsgGraph> graph);

  std::vector<IsgReport> step(std::int32_t x);

  std::int64_t alpha_star() const { return alpha_star_; }
  std::int64_t beta_star() const { return beta_star_; }
  std::size_t live_intervals() const;
  std::uint64_t last_work() const { return last_work_; }

 private:
  struct Hit {
    std::int32_t edge = 0;
    std::int64_t time = 0;
  };
  using Set = IntervalSet<Hit>;

  bool live(std::int32_t e) const;

  std::shared_ptr<const IsgGraph> graph_;
  std::vector<std::int64_t> lo_;  // effective per-edge bounds
  std::vector<std::int64_t> hi_;
  std::int64_t alpha_star_ = 1;
  std::int64_t beta_star_ = 0;
  bool empty_window_ = true;
  std::int64_t position_ = 0;
  PositionRing<std::int32_t> history_;
  PositionRing<std::vector<std::pair<std::int32_t, Set::Key>>> created_;
  std::vector<std::deque<std::int64_t>> times_;
  std::vector<Set> sets_;
  std::uint64_t last_work_ = 0;
};

}  // namespace gapmatch

#endif  // GAPMATCH_ISG_H_
