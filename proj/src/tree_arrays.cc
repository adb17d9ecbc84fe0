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

#include "gapmatch/tree_arrays.h"

#include <algorithm>
#include <stdexcept>

namespace gapmatch {
namespace {

// Nodes in breadth-first order from the root.
std::vector<std::int32_t> top_down(const SuffixTree& tree) {
  std::vector<std::int32_t> order;
  order.reserve(tree.size());
  order.push_back(tree.root);
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (std::int32_t c : tree.children[order[i]]) order.push_back(c);
  }
  return order;
}

}  // namespace

std::vector<bool> partition_tree(const SuffixTree& tree, std::span<const std::int64_t> weights,
                                 std::int64_t threshold) {
  const std::int32_t n = tree.size();
  if (static_cast<std::int32_t>(weights.size()) != n) {
    throw std::invalid_argument("one weight per tree node expected");
  }
  std::vector<bool> special(n, false);
  std::vector<std::int64_t> residual(weights.begin(), weights.end());
  auto order = top_down(tree);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    std::int32_t u = *it;
    if (u == tree.root) continue;
    if (residual[u] >= threshold) {
      special[u] = true;
    } else {
      residual[tree.parent[u]] += residual[u];
    }
  }
  special[tree.root] = true;
  return special;
}

std::vector<std::int32_t> nearest_special(const SuffixTree& tree,
                                          const std::vector<bool>& special) {
  std::vector<std::int32_t> nearest(tree.size(), -1);
  for (std::int32_t u : top_down(tree)) {
    if (u == tree.root) continue;
    std::int32_t p = tree.parent[u];
    nearest[u] = special[p] ? p : nearest[p];
  }
  return nearest;
}

std::int64_t ceil_sqrt(std::int64_t x) {
  if (x <= 0) return 0;
  std::int64_t lo = 1, hi = std::min<std::int64_t>(x, std::int64_t{3037000499});
  while (lo < hi) {
    std::int64_t mid = lo + (hi - lo) / 2;
    if (mid * mid >= x) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  return lo;
}

AncestorHeads::AncestorHeads(const SuffixTree& tree, std::int32_t width,
                             std::vector<Owned> owned, std::int64_t threshold)
    : parent_(tree.parent), width_(width), owned_(std::move(owned)) {
  if (static_cast<std::int32_t>(owned_.size()) != tree.size()) {
    throw std::invalid_argument("one owned list per tree node expected");
  }
  std::vector<std::int64_t> weights(owned_.size());
  for (std::size_t w = 0; w < owned_.size(); ++w) {
    weights[w] = static_cast<std::int64_t>(owned_[w].size());
    for (auto [slot, head] : owned_[w]) {
      if (slot < 0 || slot >= width_) throw std::out_of_range("owned slot out of range");
    }
  }
  special_ = partition_tree(tree, weights, std::max<std::int64_t>(threshold, 1));
  special_count_ = static_cast<std::int32_t>(std::count(special_.begin(), special_.end(), true));
  nearest_ = gapmatch::nearest_special(tree, special_);
  // Parents are built before children, so every backfill source exists.
  for (std::int32_t u : top_down(tree)) {
    if (!special_[u]) continue;
    std::vector<std::int32_t> array;
    construct_on_path(u, array, build_work_);
    stored_.emplace(u, std::move(array));
  }
}

void AncestorHeads::construct_on_path(std::int32_t u, std::vector<std::int32_t>& out,
                                      std::uint64_t& work) const {
  out.assign(width_, kNil);
  work += static_cast<std::uint64_t>(width_) + 1;
  const std::int32_t stop = nearest_[u];
  for (std::int32_t w = u; w != stop; w = parent_[w]) {
    ++work;
    for (auto [slot, head] : owned_[w]) {
      ++work;
      if (out[slot] == kNil) out[slot] = head;
    }
  }
  if (stop < 0) return;
  const auto& above = stored_.at(stop);
  for (std::int32_t s = 0; s < width_; ++s) {
    if (out[s] == kNil) out[s] = above[s];
  }
  work += static_cast<std::uint64_t>(width_);
}

const std::vector<std::int32_t>& AncestorHeads::heads(std::int32_t u,
                                                      std::vector<std::int32_t>& scratch,
                                                      std::uint64_t& work) const {
  if (special_[u]) {
    ++work;
    return stored_.at(u);
  }
  construct_on_path(u, scratch, work);
  return scratch;
}

std::int64_t AncestorHeads::max_path_weight() const {
  std::int64_t best = 0;
  for (std::size_t u = 0; u < owned_.size(); ++u) {
    if (special_[u]) continue;
    std::int64_t sum = 0;
    for (std::int32_t w = static_cast<std::int32_t>(u); w != nearest_[u]; w = parent_[w]) {
      sum += static_cast<std::int64_t>(owned_[w].size());
    }
    best = std::max(best, sum);
  }
  return best;
}

}  // namespace gapmatch
