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

// Dynamic multiset of closed integer intervals with stabbing queries.
//
// Stored as a priority search tree: nodes are ordered by (lo, slot) through
// split keys, and each node holds the interval with the largest hi in its
// subtree that is not held higher up. A stab at q therefore only descends
// into nodes whose held interval reaches q, and touches O(height + k) nodes.
// Balance is kept by scapegoat-style partial rebuilds, so height is
// O(log n) and updates are amortized O(log n).

#ifndef GAPMATCH_STABBING_H_
#define GAPMATCH_STABBING_H_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

namespace gapmatch {

template <class Payload>
class IntervalSet {
 public:
  using Key = std::uint64_t;

  Key insert(std::int64_t lo, std::int64_t hi, Payload payload) {
    if (lo > hi) throw std::invalid_argument("interval with lo > hi");
    std::int32_t slot = allocate_slot(lo, hi, std::move(payload));
    insert_slot(slot);
    ++live_;
    max_live_ = std::max(max_live_, live_);
    return (static_cast<Key>(points_[slot].gen) << 32) | static_cast<std::uint32_t>(slot);
  }

  void erase(Key key) {
    auto slot = static_cast<std::int32_t>(key & 0xffffffffu);
    auto gen = static_cast<std::uint32_t>(key >> 32);
    if (slot < 0 || slot >= static_cast<std::int32_t>(points_.size()) ||
        !points_[slot].live || points_[slot].gen != gen) {
      throw std::invalid_argument("erase of a dead interval key");
    }
    erase_slot(slot);
    points_[slot].live = false;
    ++points_[slot].gen;
    free_slots_.push_back(slot);
    --live_;
    if (live_ == 0) {
      clear_nodes();
    } else if (static_cast<double>(live_) < kAlpha * static_cast<double>(max_live_)) {
      root_ = rebuild(root_);
      max_live_ = live_;
    }
  }

  // Calls f(lo, hi, payload) for every interval containing q.
  template <class F>
  void stab(std::int64_t q, F&& f) const {
    last_visits_ = 0;
    stack_.clear();
    if (root_ >= 0) stack_.push_back(root_);
    while (!stack_.empty()) {
      std::int32_t n = stack_.back();
      stack_.pop_back();
      ++last_visits_;
      const Node& node = nodes_[n];
      const Point& p = points_[node.point];
      if (p.hi < q) continue;
      if (p.lo <= q) f(p.lo, p.hi, p.payload);
      if (node.left >= 0) stack_.push_back(node.left);
      if (node.right >= 0 && node.split_lo <= q) stack_.push_back(node.right);
    }
  }

  std::vector<Payload> stab(std::int64_t q) const {
    std::vector<Payload> out;
    stab(q, [&](std::int64_t, std::int64_t, const Payload& p) { out.push_back(p); });
    return out;
  }

  std::size_t size() const { return live_; }
  bool empty() const { return live_ == 0; }

  // Nodes touched by the most recent stab.
  std::uint64_t last_visits() const { return last_visits_; }
  std::int32_t height() const { return height_of(root_); }

  void clear() {
    clear_nodes();
    points_.clear();
    free_slots_.clear();
    live_ = 0;
    max_live_ = 0;
  }

 private:
  static constexpr double kAlpha = 0.7;

  struct Point {
    std::int64_t lo = 0;
    std::int64_t hi = 0;
    Payload payload{};
    std::uint32_t gen = 0;
    bool live = false;
  };

  struct Node {
    std::int64_t split_lo = 0;
    std::int32_t split_slot = 0;
    std::int32_t point = -1;
    std::int32_t left = -1;
    std::int32_t right = -1;
    std::int32_t size = 0;
  };

  // Strict order on stored points by (lo, slot).
  bool goes_left(std::int32_t slot, const Node& n) const {
    const Point& p = points_[slot];
    return p.lo < n.split_lo || (p.lo == n.split_lo && slot < n.split_slot);
  }

  bool higher(std::int32_t a, std::int32_t b) const {
    const Point& pa = points_[a];
    const Point& pb = points_[b];
    return pa.hi > pb.hi || (pa.hi == pb.hi && a < b);
  }

  std::int32_t allocate_slot(std::int64_t lo, std::int64_t hi, Payload payload) {
    std::int32_t slot;
    if (!free_slots_.empty()) {
      slot = free_slots_.back();
      free_slots_.pop_back();
    } else {
      slot = static_cast<std::int32_t>(points_.size());
      points_.emplace_back();
    }
    Point& p = points_[slot];
    p.lo = lo;
    p.hi = hi;
    p.payload = std::move(payload);
    p.live = true;
    return slot;
  }

  std::int32_t new_node(std::int32_t slot) {
    std::int32_t id;
    if (!free_nodes_.empty()) {
      id = free_nodes_.back();
      free_nodes_.pop_back();
    } else {
      id = static_cast<std::int32_t>(nodes_.size());
      nodes_.emplace_back();
    }
    Node& n = nodes_[id];
    n.split_lo = points_[slot].lo;
    n.split_slot = slot;
    n.point = slot;
    n.left = n.right = -1;
    n.size = 1;
    return id;
  }

  void clear_nodes() {
    nodes_.clear();
    free_nodes_.clear();
    root_ = -1;
  }

  void insert_slot(std::int32_t slot) {
    if (root_ < 0) {
      root_ = new_node(slot);
      return;
    }
    path_.clear();
    std::int32_t cur = root_;
    std::int32_t carried = slot;
    while (true) {
      path_.push_back(cur);
      Node& n = nodes_[cur];
      ++n.size;
      if (higher(carried, n.point)) std::swap(carried, n.point);
      bool left = goes_left(carried, n);
      std::int32_t next = left ? n.left : n.right;
      if (next < 0) {
        std::int32_t leaf = new_node(carried);
        // new_node may reallocate nodes_.
        if (left) {
          nodes_[cur].left = leaf;
        } else {
          nodes_[cur].right = leaf;
        }
        path_.push_back(leaf);
        break;
      }
      cur = next;
    }
    const double limit = std::log(static_cast<double>(live_ + 1)) / std::log(1.0 / kAlpha);
    if (static_cast<double>(path_.size()) <= limit + 1.0) return;
    // Highest unbalanced ancestor on the insertion path.
    for (std::size_t i = 0; i < path_.size(); ++i) {
      const Node& n = nodes_[path_[i]];
      std::int32_t ls = n.left >= 0 ? nodes_[n.left].size : 0;
      std::int32_t rs = n.right >= 0 ? nodes_[n.right].size : 0;
      if (static_cast<double>(std::max(ls, rs)) > kAlpha * static_cast<double>(n.size)) {
        std::int32_t rebuilt = rebuild(path_[i]);
        if (i == 0) {
          root_ = rebuilt;
        } else {
          Node& parent = nodes_[path_[i - 1]];
          if (parent.left == path_[i]) {
            parent.left = rebuilt;
          } else {
            parent.right = rebuilt;
          }
        }
        return;
      }
    }
  }

  void erase_slot(std::int32_t slot) {
    std::int32_t parent = -1;
    std::int32_t cur = root_;
    while (cur >= 0 && nodes_[cur].point != slot) {
      --nodes_[cur].size;
      parent = cur;
      cur = goes_left(slot, nodes_[cur]) ? nodes_[cur].left : nodes_[cur].right;
    }
    if (cur < 0) throw std::logic_error("interval set corrupted");
    --nodes_[cur].size;
    while (true) {
      Node& n = nodes_[cur];
      std::int32_t c = -1;
      if (n.left >= 0 && n.right >= 0) {
        c = higher(nodes_[n.left].point, nodes_[n.right].point) ? n.left : n.right;
      } else if (n.left >= 0) {
        c = n.left;
      } else if (n.right >= 0) {
        c = n.right;
      }
      if (c < 0) {
        if (parent < 0) {
          root_ = -1;
        } else if (nodes_[parent].left == cur) {
          nodes_[parent].left = -1;
        } else {
          nodes_[parent].right = -1;
        }
        free_nodes_.push_back(cur);
        return;
      }
      n.point = nodes_[c].point;
      --nodes_[c].size;
      parent = cur;
      cur = c;
    }
  }

  void collect(std::int32_t n, std::vector<std::int32_t>& out) {
    if (n < 0) return;
    out.push_back(nodes_[n].point);
    collect(nodes_[n].left, out);
    collect(nodes_[n].right, out);
    free_nodes_.push_back(n);
  }

  std::int32_t rebuild(std::int32_t subtree) {
    std::vector<std::int32_t> slots;
    collect(subtree, slots);
    std::sort(slots.begin(), slots.end(), [&](std::int32_t a, std::int32_t b) {
      const Point& pa = points_[a];
      const Point& pb = points_[b];
      return pa.lo < pb.lo || (pa.lo == pb.lo && a < b);
    });
    return build(slots);
  }

  std::int32_t build(std::vector<std::int32_t>& sorted) {
    if (sorted.empty()) return -1;
    std::size_t top = 0;
    for (std::size_t i = 1; i < sorted.size(); ++i) {
      if (higher(sorted[i], sorted[top])) top = i;
    }
    std::int32_t held = sorted[top];
    sorted.erase(sorted.begin() + static_cast<std::ptrdiff_t>(top));
    std::int32_t id = new_node(held);
    nodes_[id].size = static_cast<std::int32_t>(sorted.size()) + 1;
    if (sorted.empty()) return id;
    std::size_t mid = sorted.size() / 2;
    nodes_[id].split_lo = points_[sorted[mid]].lo;
    nodes_[id].split_slot = sorted[mid];
    std::vector<std::int32_t> right(sorted.begin() + static_cast<std::ptrdiff_t>(mid), sorted.end());
    sorted.resize(mid);
    std::int32_t l = build(sorted);
    std::int32_t r = build(right);
    nodes_[id].left = l;
    nodes_[id].right = r;
    return id;
  }

  std::int32_t height_of(std::int32_t n) const {
    if (n < 0) return 0;
    return 1 + std::max(height_of(nodes_[n].left), height_of(nodes_[n].right));
  }

  std::vector<Point> points_;
  std::vector<std::int32_t> free_slots_;
  std::vector<Node> nodes_;
  std::vector<std::int32_t> free_nodes_;
  std::int32_t root_ = -1;
  std::size_t live_ = 0;
  std::size_t max_live_ = 0;
  std::vector<std::int32_t> path_;
  mutable std::vector<std::int32_t> stack_;
  mutable std::uint64_t last_visits_ = 0;
};

}  // namespace gapmatch

#endif  // GAPMATCH_STABBING_H_
