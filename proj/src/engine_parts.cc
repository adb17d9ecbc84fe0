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

#include "engine_parts.h"

#include <map>
#include <tuple>

namespace gapmatch::detail {

std::vector<EdgeGroup> make_groups(const DictGraph& graph, std::span<const std::int32_t> edges,
                                   const std::function<bool(std::int32_t)>& left_responsible) {
  using Key = std::tuple<std::int32_t, std::int32_t, bool, std::int64_t, std::int64_t>;
  std::map<Key, std::size_t> where;
  std::vector<EdgeGroup> groups;
  for (std::int32_t e : edges) {
    const DictEdge& edge = graph.edges[e];
    EdgeGroup g;
    g.left = edge.left;
    g.right = edge.right;
    g.left_responsible = left_responsible(e);
    if (edge.bounds) {
      g.alpha = edge.bounds->alpha;
      g.beta = edge.bounds->beta;
    }
    auto [it, fresh] =
        where.try_emplace(Key{g.left, g.right, g.left_responsible, g.alpha, g.beta}, groups.size());
    if (fresh) groups.push_back(std::move(g));
    groups[it->second].patterns.push_back(edge.pattern);
  }
  return groups;
}

GroupIndex::GroupIndex(const std::vector<EdgeGroup>& groups, std::int32_t num_left,
                       std::int32_t num_right)
    : by_left(num_left), by_right(num_right) {
  for (std::int32_t g = 0; g < static_cast<std::int32_t>(groups.size()); ++g) {
    if (groups[g].left_responsible) {
      by_left[groups[g].left].push_back(g);
    } else {
      by_right[groups[g].right].push_back(g);
    }
  }
}

// ---------------------------------------------------------------------------

UnboundedPart::UnboundedPart(std::vector<EdgeGroup> groups, std::int32_t num_left,
                             std::int32_t num_right)
    : groups_(std::move(groups)),
      index_(groups_, num_left, num_right),
      lists_(num_right, static_cast<std::int32_t>(groups_.size())) {}

void UnboundedPart::on_first_arrival(std::int32_t u, std::int64_t t, std::uint64_t& work) {
  for (std::int32_t g : index_.by_left[u]) {
    ++work;
    lists_.push_front(groups_[g].right, g, t);
  }
}

void UnboundedPart::emit(const EdgeGroup& g, std::int64_t hi, const TimeStore& store,
                         Sink& sink) {
  if (!sink.witness()) {
    sink.emit(g.patterns);
    return;
  }
  for (std::int64_t t : store.history[g.left]) {
    if (t > hi) break;
    sink.emit(g.patterns, t);
  }
}

void UnboundedPart::report(std::int32_t v, std::int32_t m_v, const TimeStore& store,
                           Sink& sink) {
  const std::int64_t hi = sink.position - m_v;
  std::uint64_t& work = *sink.work;
  // Entries newer than hi form a prefix; everything after it is valid.
  for (std::int32_t g = lists_.head(v); g != ReportingLists::kNil; g = lists_.next(g)) {
    ++work;
    if (lists_.time(g) > hi) continue;
    emit(groups_[g], hi, store, sink);
  }
  for (std::int32_t g : index_.by_right[v]) {
    ++work;
    std::int64_t first = store.first[groups_[g].left];
    if (first != 0 && first <= hi) emit(groups_[g], hi, store, sink);
  }
}

// ---------------------------------------------------------------------------

UniformPart::UniformPart(std::vector<EdgeGroup> groups, std::int32_t num_left,
                         std::int32_t num_right, std::int64_t alpha, std::int64_t beta)
    : groups_(std::move(groups)),
      index_(groups_, num_left, num_right),
      lists_(num_right, static_cast<std::int32_t>(groups_.size())),
      alpha_(alpha),
      beta_(beta) {}

void UniformPart::on_activate(std::int32_t u, std::int64_t t, std::uint64_t& work) {
  for (std::int32_t g : index_.by_left[u]) {
    ++work;
    lists_.push_front(groups_[g].right, g, t);
  }
}

void UniformPart::on_window_empty(std::int32_t u, std::uint64_t& work) {
  for (std::int32_t g : index_.by_left[u]) {
    ++work;
    lists_.unlink(g);
  }
}

void UniformPart::emit(const EdgeGroup& g, std::int64_t lo, std::int64_t hi, bool known_valid,
                       const TimeStore& store, Sink& sink) {
  if (!sink.witness()) {
    if (known_valid || store.any_in(g.left, lo, hi, *sink.work)) sink.emit(g.patterns);
    return;
  }
  store.each_in(g.left, lo, hi, *sink.work,
                [&](std::int64_t t) { sink.emit(g.patterns, t); });
}

void UniformPart::report(std::int32_t v, std::int32_t m_v, const TimeStore& store,
                         Sink& sink) {
  const std::int64_t lo = sink.position - beta_ - m_v;
  const std::int64_t hi = sink.position - alpha_ - m_v;
  std::uint64_t& work = *sink.work;
  std::int32_t g = lists_.head(v);
  while (g != ReportingLists::kNil) {
    ++work;
    std::int64_t t = lists_.time(g);
    if (t < lo) {
      // Older entries follow; none can become valid for v again.
      work += static_cast<std::uint64_t>(lists_.truncate_from(g));
      break;
    }
    std::int32_t next = lists_.next(g);
    emit(groups_[g], lo, hi, t <= hi, store, sink);
    g = next;
  }
  for (std::int32_t h : index_.by_right[v]) {
    ++work;
    emit(groups_[h], lo, hi, false, store, sink);
  }
}

// ---------------------------------------------------------------------------

IntervalPart::IntervalPart(std::vector<EdgeGroup> groups, std::int32_t num_left,
                           std::int32_t num_right, std::vector<std::int32_t> right_length,
                           std::int64_t horizon)
    : groups_(std::move(groups)),
      index_(groups_, num_left, num_right),
      right_length_(std::move(right_length)),
      sets_(num_right),
      created_(static_cast<std::size_t>(horizon) + 2),
      stamp_(groups_.size(), 0) {}

void IntervalPart::on_arrival(std::int32_t u, std::int64_t t, std::uint64_t& work) {
  auto& made = created_.at(t);
  for (std::int32_t g : index_.by_left[u]) {
    const EdgeGroup& grp = groups_[g];
    const std::int64_t m = right_length_[grp.right];
    Set& set = sets_[grp.right];
    made.emplace_back(grp.right, set.insert(t + grp.alpha + m, t + grp.beta + m, Hit{g, t}));
    ++live_;
    work += 1 + static_cast<std::uint64_t>(std::bit_width(set.size()));
  }
}

void IntervalPart::on_expire(std::int64_t t, std::uint64_t& work) {
  auto& made = created_.at(t);
  for (auto [v, key] : made) {
    sets_[v].erase(key);
    --live_;
    work += 1 + static_cast<std::uint64_t>(std::bit_width(sets_[v].size()));
  }
  made.clear();
}

void IntervalPart::report(std::int32_t v, std::int32_t m_v, const TimeStore& store,
                          Sink& sink) {
  const std::int64_t i = sink.position;
  std::uint64_t& work = *sink.work;
  sets_[v].stab(i, [&](std::int64_t, std::int64_t, const Hit& hit) {
    const EdgeGroup& g = groups_[hit.group];
    if (sink.witness()) {
      sink.emit(g.patterns, hit.time);
    } else if (stamp_[hit.group] != i) {
      stamp_[hit.group] = i;
      sink.emit(g.patterns);
    }
  });
  work += sets_[v].last_visits();
  for (std::int32_t h : index_.by_right[v]) {
    ++work;
    const EdgeGroup& g = groups_[h];
    const std::int64_t lo = i - g.beta - m_v;
    const std::int64_t hi = i - g.alpha - m_v;
    if (!sink.witness()) {
      if (store.any_in(g.left, lo, hi, work)) sink.emit(g.patterns);
    } else {
      store.each_in(g.left, lo, hi, work, [&](std::int64_t t) { sink.emit(g.patterns, t); });
    }
  }
}

}  // namespace gapmatch::detail
