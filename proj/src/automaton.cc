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

#include "gapmatch/automaton.h"

#include <algorithm>
#include <deque>

namespace gapmatch {

Automaton::State Automaton::child(State s, unsigned char c) const {
  const auto& edges = goto_[s];
  auto it = std::lower_bound(edges.begin(), edges.end(), c,
                             [](const Edge& e, unsigned char x) { return e.c < x; });
  return (it != edges.end() && it->c == c) ? it->to : -1;
}

Automaton::Automaton(std::span<const GappedPattern> patterns,
                     std::size_t dense_threshold)
    : index_(index_subpatterns(patterns)) {
  goto_.emplace_back();
  std::vector<std::int32_t> left_at{-1}, right_at{-1};
  complete_patterns_.emplace_back();

  auto insert = [&](const std::string& word) {
    State s = 0;
    for (unsigned char c : word) {
      State t = child(s, c);
      if (t < 0) {
        t = static_cast<State>(goto_.size());
        goto_.emplace_back();
        left_at.push_back(-1);
        right_at.push_back(-1);
        complete_patterns_.emplace_back();
        auto& edges = goto_[s];
        auto it = std::lower_bound(
            edges.begin(), edges.end(), c,
            [](const Edge& e, unsigned char x) { return e.c < x; });
        edges.insert(it, Edge{c, t});
      }
      s = t;
    }
    return s;
  };

  std::vector<State> left_state(index_.left.size());
  std::vector<State> right_state(index_.right.size());
  for (std::size_t u = 0; u < index_.left.size(); ++u) {
    left_state[u] = insert(index_.left[u]);
    left_at[left_state[u]] = static_cast<std::int32_t>(u);
  }
  for (std::size_t v = 0; v < index_.right.size(); ++v) {
    right_state[v] = insert(index_.right[v]);
    right_at[right_state[v]] = static_cast<std::int32_t>(v);
  }
  for (std::int32_t pid : index_.gapless) {
    complete_patterns_[insert(patterns[pid].first)].push_back(pid);
  }

  const std::size_t n = goto_.size();
  fail_.assign(n, 0);
  std::vector<State> order;
  order.reserve(n);
  std::deque<State> queue;
  for (const Edge& e : goto_[0]) queue.push_back(e.to);
  while (!queue.empty()) {
    State s = queue.front();
    queue.pop_front();
    order.push_back(s);
    for (const Edge& e : goto_[s]) {
      State f = fail_[s];
      while (f != 0 && child(f, e.c) < 0) f = fail_[f];
      State g = child(f, e.c);
      fail_[e.to] = (g >= 0 && g != e.to) ? g : 0;
      queue.push_back(e.to);
    }
  }

  deepest_left_.assign(n, -1);
  deepest_right_.assign(n, -1);
  deepest_complete_.assign(n, -1);
  complete_next_.assign(n, -1);
  chain_length_.assign(n, 0);
  for (State s : order) {
    State f = fail_[s];
    deepest_left_[s] = left_at[s] >= 0 ? left_at[s] : deepest_left_[f];
    deepest_right_[s] = right_at[s] >= 0 ? right_at[s] : deepest_right_[f];
    deepest_complete_[s] = !complete_patterns_[s].empty() ? s : deepest_complete_[f];
    complete_next_[s] = deepest_complete_[f];
    bool keyword = left_at[s] >= 0 || right_at[s] >= 0 || !complete_patterns_[s].empty();
    chain_length_[s] = chain_length_[f] + (keyword ? 1 : 0);
  }

  left_parent_.resize(index_.left.size());
  left_length_.resize(index_.left.size());
  for (std::size_t u = 0; u < index_.left.size(); ++u) {
    left_parent_[u] = deepest_left_[fail_[left_state[u]]];
    left_length_[u] = static_cast<std::int32_t>(index_.left[u].size());
  }
  right_parent_.resize(index_.right.size());
  right_length_.resize(index_.right.size());
  for (std::size_t v = 0; v < index_.right.size(); ++v) {
    right_parent_[v] = deepest_right_[fail_[right_state[v]]];
    right_length_[v] = static_cast<std::int32_t>(index_.right[v].size());
  }

  if (n <= dense_threshold && n > 1) {
    delta_.assign(n * 256, 0);
    for (const Edge& e : goto_[0]) delta_[e.c] = e.to;
    for (State s : order) {
      State* row = &delta_[static_cast<std::size_t>(s) * 256];
      const State* frow = &delta_[static_cast<std::size_t>(fail_[s]) * 256];
      std::copy(frow, frow + 256, row);
      for (const Edge& e : goto_[s]) row[e.c] = e.to;
    }
  }
}

Automaton::State Automaton::next(State s, unsigned char c) const {
  if (!delta_.empty()) return delta_[static_cast<std::size_t>(s) * 256 + c];
  while (true) {
    State t = child(s, c);
    if (t >= 0) return t;
    if (s == 0) return 0;
    s = fail_[s];
  }
}

void Automaton::collect(State s, ArrivalEvent& event) const {
  event.clear();
  for (std::int32_t v = deepest_right_[s]; v >= 0; v = right_parent_[v]) {
    event.r_arrivals.push_back({v, right_length_[v]});
  }
  for (std::int32_t u = deepest_left_[s]; u >= 0; u = left_parent_[u]) {
    event.l_arrivals.push_back({u, left_length_[u]});
  }
  for (std::int32_t t = deepest_complete_[s]; t >= 0; t = complete_next_[t]) {
    const auto& ids = complete_patterns_[t];
    event.complete.insert(event.complete.end(), ids.begin(), ids.end());
  }
}

std::pair<Automaton::State, ArrivalEvent> Automaton::step(
    State s, unsigned char c, std::int64_t position) const {
  std::pair<State, ArrivalEvent> out;
  out.first = next(s, c);
  collect(out.first, out.second);
  out.second.position = position;
  return out;
}

SuffixTree Automaton::build_suffix_tree() const {
  SuffixTree t;
  const auto n = num_left();
  t.root = n;
  t.parent.assign(n + 1, -1);
  t.depth.assign(n + 1, 0);
  t.children.assign(n + 1, {});
  for (std::int32_t u = 0; u < n; ++u) {
    t.parent[u] = left_parent_[u] >= 0 ? left_parent_[u] : t.root;
    t.children[t.parent[u]].push_back(u);
  }
  // Parents are strictly shorter strings, so process by length.
  std::vector<std::int32_t> by_len(n);
  for (std::int32_t u = 0; u < n; ++u) by_len[u] = u;
  std::sort(by_len.begin(), by_len.end(), [&](std::int32_t a, std::int32_t b) {
    return left_length_[a] < left_length_[b];
  });
  for (std::int32_t u : by_len) t.depth[u] = t.depth[t.parent[u]] + 1;
  return t;
}

const ArrivalEvent& AutomatonCursor::step(unsigned char c) {
  state_ = automaton_->next(state_, c);
  automaton_->collect(state_, event_);
  event_.position = ++position_;
  return event_;
}

}  // namespace gapmatch
