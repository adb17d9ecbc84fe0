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

#include <string>

#include "engine_parts.h"

namespace gapmatch::detail {
namespace {

constexpr std::int32_t kNil = AncestorHeads::kNil;

// Top-down walk over the tree with enter/leave callbacks, without recursion.
template <class Enter, class Leave>
void walk_tree(const SuffixTree& tree, Enter&& enter, Leave&& leave) {
  std::vector<std::pair<std::int32_t, bool>> stack{{tree.root, false}};
  while (!stack.empty()) {
    auto [u, leaving] = stack.back();
    stack.pop_back();
    if (leaving) {
      leave(u);
      continue;
    }
    enter(u);
    stack.emplace_back(u, true);
    for (std::int32_t c : tree.children[u]) stack.emplace_back(c, false);
  }
}

// Assigns dense slot numbers to the right vertices used by `groups`.
std::int32_t assign_slots(const std::vector<EdgeGroup>& groups, std::int32_t num_right,
                          std::vector<std::int32_t>& slot_of,
                          std::vector<std::int32_t>* right_of_slot) {
  slot_of.assign(num_right, -1);
  std::int32_t k = 0;
  for (const auto& g : groups) {
    if (slot_of[g.right] >= 0) continue;
    slot_of[g.right] = k++;
    if (right_of_slot) right_of_slot->push_back(g.right);
  }
  return k;
}

}  // namespace

HeavyChainPart::HeavyChainPart(std::vector<EdgeGroup> groups, const SuffixTree& tree,
                               std::int32_t num_right, std::int64_t threshold, bool bounded,
                               std::int64_t alpha, std::int64_t beta, std::int64_t max_second)
    : groups_(std::move(groups)),
      bounded_(bounded),
      alpha_(bounded ? alpha : 0),
      beta_(bounded ? beta : kNoBound),
      delay_(bounded ? beta + max_second + 1 : 0) {
  const auto num_groups = static_cast<std::int32_t>(groups_.size());
  const std::int32_t k = assign_slots(groups_, num_right, slot_of_, nullptr);

  std::vector<std::vector<std::int32_t>> at_node(tree.size());
  for (std::int32_t g = 0; g < num_groups; ++g) at_node[groups_[g].left].push_back(g);

  next_.assign(num_groups, kNil);
  std::vector<AncestorHeads::Owned> owned(tree.size());
  std::vector<std::int32_t> cur(k, kNil);
  std::vector<std::vector<std::pair<std::int32_t, std::int32_t>>> undo(tree.size());
  walk_tree(
      tree,
      [&](std::int32_t w) {
        const auto& mine = at_node[w];
        for (auto it = mine.rbegin(); it != mine.rend(); ++it) {
          std::int32_t slot = slot_of_[groups_[*it].right];
          next_[*it] = cur[slot];
          undo[w].emplace_back(slot, cur[slot]);
          cur[slot] = *it;
        }
        for (std::int32_t g : mine) {
          std::int32_t slot = slot_of_[groups_[g].right];
          if (cur[slot] == g) owned[w].emplace_back(slot, g);
        }
      },
      [&](std::int32_t w) {
        for (auto it = undo[w].rbegin(); it != undo[w].rend(); ++it) cur[it->first] = it->second;
        undo[w].clear();
      });

  heads_ = AncestorHeads(tree, k, std::move(owned), threshold);
  lists_ = ReportingLists(k, num_groups);
  stamp_.assign(num_groups, 0);
  last_splice_.assign(tree.size(), 0);
}

void HeavyChainPart::splice(std::int32_t u, std::int64_t t, std::int64_t /*now*/,
                            std::uint64_t& work) {
  if (!bounded_ && last_splice_[u] != 0) return;
  last_splice_[u] = t;
  const auto& heads = heads_.heads(u, scratch_, work);
  for (std::int32_t slot = 0; slot < heads_.width(); ++slot) {
    ++work;
    std::int32_t g = heads[slot];
    if (g == kNil) continue;
    if (bounded_ || !lists_.linked(g)) lists_.push_front(slot, g, t);
  }
  if (bounded_) deadlines_.emplace_back(t, u);
}

void HeavyChainPart::on_deadlines(std::int64_t now, std::uint64_t& work) {
  while (!deadlines_.empty() && deadlines_.front().first + delay_ <= now) {
    auto [t, u] = deadlines_.front();
    deadlines_.pop_front();
    ++work;
    if (last_splice_[u] != t) continue;
    const auto& heads = heads_.heads(u, scratch_, work);
    for (std::int32_t slot = 0; slot < heads_.width(); ++slot) {
      ++work;
      std::int32_t g = heads[slot];
      if (g != kNil && lists_.linked(g) && lists_.time(g) <= t) lists_.unlink(g);
    }
  }
}

void HeavyChainPart::report(std::int32_t v, std::int32_t m_v, const TimeStore& store,
                            Sink& sink) {
  const std::int32_t slot = slot_of_[v];
  if (slot < 0) return;
  const std::int64_t i = sink.position;
  const std::int64_t hi = i - alpha_ - m_v;
  const std::int64_t lo = bounded_ ? i - beta_ - m_v : std::numeric_limits<std::int64_t>::min();
  std::uint64_t& work = *sink.work;

  std::int32_t g = lists_.head(slot);
  while (g != ReportingLists::kNil) {
    ++work;
    const std::int64_t t = lists_.time(g);
    if (bounded_ && t < lo) {
      work += static_cast<std::uint64_t>(lists_.truncate_from(g));
      break;
    }
    const std::int32_t next = lists_.next(g);
    // Every group on the chain arrived at t; chains merge, so stop at the
    // first group this position has already seen.
    const bool direct = t <= hi;
    for (std::int32_t h = g; h != kNil && stamp_[h] != i; h = next_[h]) {
      stamp_[h] = i;
      ++work;
      const EdgeGroup& grp = groups_[h];
      if (bounded_) {
        if (!sink.witness()) {
          if (direct || store.any_in(grp.left, lo, hi, work)) sink.emit(grp.patterns);
        } else {
          store.each_in(grp.left, lo, hi, work,
                        [&](std::int64_t w) { sink.emit(grp.patterns, w); });
        }
        continue;
      }
      const std::int64_t first = store.first[grp.left];
      if (!direct && (first == 0 || first > hi)) continue;
      if (!sink.witness()) {
        sink.emit(grp.patterns);
      } else {
        for (std::int64_t w : store.history[grp.left]) {
          if (w > hi) break;
          sink.emit(grp.patterns, w);
        }
      }
    }
    g = next;
  }
}

// ---------------------------------------------------------------------------

ActiveWindowPart::ActiveWindowPart(std::vector<EdgeGroup> groups, const SuffixTree& tree,
                                   std::vector<std::int32_t> right_length,
                                   std::int64_t threshold_base, std::int64_t alpha_star,
                                   std::int64_t max_second, std::int64_t max_span)
    : groups_(std::move(groups)), right_length_(std::move(right_length)), alpha_star_(alpha_star) {
  const auto num_groups = static_cast<std::int32_t>(groups_.size());
  std::int64_t beta_hi = alpha_star_;
  for (const auto& g : groups_) {
    if (g.alpha < alpha_star_) throw std::logic_error("group below the activation delay");
    beta_hi = std::max(beta_hi, g.beta);
  }
  span_ = beta_hi - alpha_star_ + 1;
  if (span_ > max_span) {
    throw EngineError("gap window span " + std::to_string(span_) +
                      " exceeds the configured cap of " + std::to_string(max_span));
  }
  const std::int32_t k = assign_slots(groups_, static_cast<std::int32_t>(right_length_.size()),
                                      slot_of_, &right_of_slot_);
  const std::int64_t width = static_cast<std::int64_t>(k) * span_;
  if (width > (std::int64_t{1} << 28)) throw EngineError("heavy window arrays too large");

  std::vector<std::vector<std::int32_t>> at_node(tree.size());
  for (std::int32_t g = 0; g < num_groups; ++g) at_node[groups_[g].left].push_back(g);
  next_.resize(num_groups);
  for (std::int32_t g = 0; g < num_groups; ++g) {
    next_[g].assign(static_cast<std::size_t>(groups_[g].beta - groups_[g].alpha + 1), kNil);
    rho_ += static_cast<std::int64_t>(next_[g].size());
  }

  std::vector<AncestorHeads::Owned> owned(tree.size());
  std::vector<std::int32_t> cur(static_cast<std::size_t>(width), kNil);
  std::vector<std::int32_t> seen(static_cast<std::size_t>(width), -1);
  std::vector<std::vector<std::pair<std::int32_t, std::int32_t>>> undo(tree.size());
  walk_tree(
      tree,
      [&](std::int32_t w) {
        const auto& mine = at_node[w];
        for (auto it = mine.rbegin(); it != mine.rend(); ++it) {
          const EdgeGroup& g = groups_[*it];
          const std::int64_t base = static_cast<std::int64_t>(slot_of_[g.right]) * span_;
          for (std::int64_t j = g.alpha; j <= g.beta; ++j) {
            auto idx = static_cast<std::int32_t>(base + (j - alpha_star_));
            next_[*it][j - g.alpha] = cur[idx];
            undo[w].emplace_back(idx, cur[idx]);
            cur[idx] = *it;
          }
        }
        for (auto [idx, old] : undo[w]) {
          if (seen[idx] == w) continue;
          seen[idx] = w;
          owned[w].emplace_back(idx, cur[idx]);
        }
      },
      [&](std::int32_t w) {
        for (auto it = undo[w].rbegin(); it != undo[w].rend(); ++it) cur[it->first] = it->second;
        undo[w].clear();
      });

  heads_ = AncestorHeads(tree, static_cast<std::int32_t>(width), std::move(owned),
                         threshold_base * span_);
  ring_ = span_ + max_second + 1;
  buckets_.resize(static_cast<std::size_t>(k * ring_));
  bucket_time_.assign(buckets_.size(), -1);
  stamp_.assign(num_groups, 0);
}

void ActiveWindowPart::activate(std::int32_t u, std::int64_t t, std::uint64_t& work) {
  const auto& heads = heads_.heads(u, scratch_, work);
  const auto width = static_cast<std::int32_t>(heads.size());
  for (std::int32_t idx = 0; idx < width; ++idx) {
    ++work;
    const std::int32_t h = heads[idx];
    if (h == kNil) continue;
    const std::int64_t slot = idx / span_;
    const std::int64_t gap = alpha_star_ + idx % span_;
    const std::int64_t due = t + gap + right_length_[right_of_slot_[slot]];
    const auto b = static_cast<std::size_t>(slot * ring_ + due % ring_);
    if (bucket_time_[b] != due) {
      held_ -= static_cast<std::int64_t>(buckets_[b].size());
      buckets_[b].clear();
      bucket_time_[b] = due;
    }
    buckets_[b].push_back(Due{h, static_cast<std::int32_t>(gap), t});
    ++held_;
  }
}

void ActiveWindowPart::report(std::int32_t v, Sink& sink) {
  const std::int32_t slot = slot_of_[v];
  if (slot < 0) return;
  const std::int64_t i = sink.position;
  const auto b = static_cast<std::size_t>(slot * ring_ + i % ring_);
  ++*sink.work;
  if (bucket_time_[b] != i) return;
  for (const Due& due : buckets_[b]) {
    for (std::int32_t h = due.head; h != kNil; h = next_[h][due.gap - groups_[h].alpha]) {
      ++*sink.work;
      const EdgeGroup& g = groups_[h];
      if (sink.witness()) {
        sink.emit(g.patterns, due.time);
      } else if (stamp_[h] != i) {
        stamp_[h] = i;
        sink.emit(g.patterns);
      }
    }
  }
  held_ -= static_cast<std::int64_t>(buckets_[b].size());
  buckets_[b].clear();
  bucket_time_[b] = -1;
}

}  // namespace gapmatch::detail
