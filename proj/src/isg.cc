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

#include "gapmatch/isg.h"

#include <algorithm>
#include <bit>
#include <limits>
#include <map>
#include <stdexcept>
#include <string>
#include <tuple>

#include "gapmatch/graph.h"

namespace gapmatch {

IsgGraph::IsgGraph(std::int32_t num_vertices, std::vector<IsgEdge> edges)
    : n_(num_vertices), edges_(std::move(edges)) {
  if (n_ < 0) throw std::invalid_argument("negative vertex count");
  std::vector<std::pair<std::int32_t, std::int32_t>> bipartite;
  bipartite.reserve(edges_.size());
  for (const auto& e : edges_) {
    check_vertex(e.tail);
    check_vertex(e.head);
    if (e.alpha < 0 || e.beta < e.alpha) throw std::invalid_argument("bad edge bounds");
    bipartite.emplace_back(e.tail, n_ + e.head);
  }
  auto result = degeneracy_orient(2 * n_, bipartite);
  degeneracy_ = result.degeneracy;

  tail_assigned_.assign(n_, {});
  head_assigned_.assign(n_, {});
  tail_groups_.assign(n_, {});
  head_groups_.assign(n_, {});
  std::map<std::tuple<std::int32_t, std::int32_t, bool>, std::int32_t> group_of;
  for (std::int32_t e = 0; e < static_cast<std::int32_t>(edges_.size()); ++e) {
    const auto& edge = edges_[e];
    bool by_tail = result.orientation.tail[e] == edge.tail;
    if (by_tail) {
      tail_assigned_[edge.tail].push_back(e);
    } else {
      head_assigned_[edge.head].push_back(e);
    }
    auto [it, fresh] = group_of.try_emplace({edge.tail, edge.head, by_tail},
                                            static_cast<std::int32_t>(groups_.size()));
    if (fresh) {
      groups_.push_back(Group{edge.tail, edge.head, by_tail, {}});
      if (by_tail) {
        tail_groups_[edge.tail].push_back(it->second);
      } else {
        head_groups_[edge.head].push_back(it->second);
      }
    }
    groups_[it->second].edges.push_back(e);
  }
}

void IsgGraph::check_vertex(std::int32_t x) const {
  if (x < 0 || x >= n_) throw std::out_of_range("unknown vertex " + std::to_string(x));
}

// ---------------------------------------------------------------------------

UnboundedIsg::UnboundedIsg(std::shared_ptr<const IsgGraph> graph)
    : graph_(std::move(graph)),
      arrived_(graph_->num_vertices(), false),
      lists_(graph_->num_vertices(), static_cast<std::int32_t>(graph_->groups().size())) {}

std::vector<std::int32_t> UnboundedIsg::arrive_head(std::int32_t v) {
  graph_->check_vertex(v);
  std::vector<std::int32_t> out;
  last_work_ = 1;
  const auto& groups = graph_->groups();
  for (std::int32_t g = lists_.head(v); g != ReportingLists::kNil; g = lists_.next(g)) {
    ++last_work_;
    out.insert(out.end(), groups[g].edges.begin(), groups[g].edges.end());
  }
  for (std::int32_t g : graph_->head_groups(v)) {
    ++last_work_;
    if (arrived_[groups[g].tail]) {
      out.insert(out.end(), groups[g].edges.begin(), groups[g].edges.end());
    }
  }
  last_work_ += out.size();
  return out;
}

void UnboundedIsg::arrive_tail(std::int32_t u) {
  graph_->check_vertex(u);
  ++last_work_;
  if (arrived_[u]) return;
  arrived_[u] = true;
  touched_.push_back(u);
  for (std::int32_t g : graph_->tail_groups(u)) {
    ++last_work_;
    lists_.push_front(graph_->groups()[g].head, g, 0);
  }
}

std::vector<std::int32_t> UnboundedIsg::step(std::int32_t x) {
  auto out = arrive_head(x);
  arrive_tail(x);
  return out;
}

void UnboundedIsg::reset() {
  for (std::int32_t u : touched_) {
    arrived_[u] = false;
    for (std::int32_t g : graph_->tail_groups(u)) lists_.unlink(g);
  }
  touched_.clear();
}

// ---------------------------------------------------------------------------

UniformIsg::UniformIsg(std::shared_ptr<const IsgGraph> graph, std::int64_t alpha,
                       std::int64_t beta)
    : graph_(std::move(graph)),
      alpha_(std::max<std::int64_t>(alpha, 1)),
      beta_(beta),
      empty_window_(beta < std::max<std::int64_t>(alpha, 1)),
      history_(empty_window_ ? 1 : static_cast<std::size_t>(beta) + 1),
      times_(graph_->num_vertices()),
      lists_(graph_->num_vertices(), static_cast<std::int32_t>(graph_->groups().size())) {
  if (alpha < 0 || beta < alpha) throw std::invalid_argument("bad window bounds");
}

std::vector<IsgReport> UniformIsg::step(std::int32_t x) {
  graph_->check_vertex(x);
  const std::int64_t i = ++position_;
  std::vector<IsgReport> out;
  last_work_ = 1;
  if (empty_window_) return out;
  const auto& groups = graph_->groups();

  // Expire the arrival that just left the window.
  if (std::int64_t t = i - beta_ - 1; t >= 1) {
    std::int32_t u = history_.at(t);
    auto& tau = times_[u];
    tau.pop_front();
    --held_times_;
    ++last_work_;
    if (tau.empty()) {
      for (std::int32_t g : graph_->tail_groups(u)) {
        ++last_work_;
        lists_.unlink(g);
      }
    }
  }
  // Delayed activation of the arrival that just entered the window.
  if (std::int64_t t = i - alpha_; t >= 1) {
    std::int32_t u = history_.at(t);
    times_[u].push_back(t);
    ++held_times_;
    ++last_work_;
    for (std::int32_t g : graph_->tail_groups(u)) {
      ++last_work_;
      lists_.push_front(groups[g].head, g, t);
    }
  }
  history_.at(i) = x;

  auto emit = [&](const IsgGraph::Group& g) {
    for (std::int64_t j : times_[g.tail]) {
      for (std::int32_t e : g.edges) out.push_back({e, j, i});
    }
  };
  for (std::int32_t g = lists_.head(x); g != ReportingLists::kNil; g = lists_.next(g)) {
    ++last_work_;
    emit(groups[g]);
  }
  for (std::int32_t g : graph_->head_groups(x)) {
    ++last_work_;
    emit(groups[g]);
  }
  last_work_ += out.size();
  return out;
}

std::int64_t UniformIsg::space_units() const {
  return held_times_ + static_cast<std::int64_t>(history_.capacity()) + lists_.linked_count();
}

// ---------------------------------------------------------------------------

NonUniformIsg::NonUniformIsg(std::shared_ptr<const IsgGraph> graph)
    : graph_(std::move(graph)) {
  const auto& edges = graph_->edges();
  lo_.resize(edges.size());
  hi_.resize(edges.size());
  bool any = false;
  std::int64_t amin = std::numeric_limits<std::int64_t>::max();
  for (std::size_t e = 0; e < edges.size(); ++e) {
    lo_[e] = std::max<std::int64_t>(edges[e].alpha, 1);
    hi_[e] = edges[e].beta;
    if (lo_[e] > hi_[e]) continue;
    any = true;
    amin = std::min(amin, lo_[e]);
    beta_star_ = std::max(beta_star_, hi_[e]);
  }
  empty_window_ = !any;
  if (any) alpha_star_ = amin;
  if (beta_star_ > (std::int64_t{1} << 26)) {
    throw std::invalid_argument("window bound too large for the history ring");
  }
  history_ = PositionRing<std::int32_t>(static_cast<std::size_t>(beta_star_) + 2);
  created_ = PositionRing<std::vector<std::pair<std::int32_t, Set::Key>>>(
      static_cast<std::size_t>(beta_star_) + 2);
  times_.resize(graph_->num_vertices());
  sets_.resize(graph_->num_vertices());
}

bool NonUniformIsg::live(std::int32_t e) const { return lo_[e] <= hi_[e]; }

std::vector<IsgReport> NonUniformIsg::step(std::int32_t x) {
  graph_->check_vertex(x);
  const std::int64_t i = ++position_;
  std::vector<IsgReport> out;
  last_work_ = 1;
  if (empty_window_) return out;
  const auto& edges = graph_->edges();

  if (std::int64_t t = i - beta_star_ - 1; t >= 1) {
    std::int32_t u = history_.at(t);
    times_[u].pop_front();
    auto& made = created_.at(t);
    for (auto [v, key] : made) {
      sets_[v].erase(key);
      last_work_ += 1 + static_cast<std::uint64_t>(sets_[v].height());
    }
    made.clear();
  }
  if (std::int64_t t = i - alpha_star_; t >= 1) {
    std::int32_t u = history_.at(t);
    times_[u].push_back(t);
    auto& made = created_.at(t);
    for (std::int32_t e : graph_->tail_assigned(u)) {
      if (!live(e)) continue;
      std::int32_t v = edges[e].head;
      made.emplace_back(v, sets_[v].insert(t + lo_[e], t + hi_[e], Hit{e, t}));
      last_work_ += 1 + static_cast<std::uint64_t>(sets_[v].height());
    }
  }
  history_.at(i) = x;

  sets_[x].stab(i, [&](std::int64_t, std::int64_t, const Hit& h) {
    out.push_back({h.edge, h.time, i});
  });
  last_work_ += sets_[x].last_visits();
  for (std::int32_t e : graph_->head_assigned(x)) {
    if (!live(e)) continue;
    const auto& tau = times_[edges[e].tail];
    auto first = std::lower_bound(tau.begin(), tau.end(), i - hi_[e]);
    last_work_ += 1 + static_cast<std::uint64_t>(std::bit_width(tau.size()));
    for (auto it = first; it != tau.end() && *it <= i - lo_[e]; ++it) {
      out.push_back({e, *it, i});
    }
  }
  last_work_ += out.size();
  return out;
}

std::size_t NonUniformIsg::live_intervals() const {
  std::size_t c = 0;
  for (const auto& s : sets_) c += s.size();
  return c;
}

}  // namespace gapmatch
