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

// Ancestor-aggregated head arrays over the suffix tree.
//
// Every tree node w owns a few (slot, head) pairs. The array of a node u has
// one entry per slot: the head owned by the deepest node on the u-to-root
// path that owns that slot. Arrays are stored only for special nodes; the
// array of any other node is rebuilt on demand from the path to its nearest
// special proper ancestor.

#ifndef GAPMATCH_TREE_ARRAYS_H_
#define GAPMATCH_TREE_ARRAYS_H_

#include <cstdint>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "gapmatch/automaton.h"

namespace gapmatch {

// Post-order greedy peeling: a node becomes special once the weight of its
// not-yet-peeled subtree reaches `threshold`; the root is always special.
std::vector<bool> partition_tree(const SuffixTree& tree, std::span<const std::int64_t> weights,
                                 std::int64_t threshold);

// Nearest special proper ancestor per node (-1 for the root).
std::vector<std::int32_t> nearest_special(const SuffixTree& tree, const std::vector<bool>& special);

// Smallest t with t * t >= x.
std::int64_t ceil_sqrt(std::int64_t x);

class AncestorHeads {
 public:
  static constexpr std::int32_t kNil = -1;
  using Owned = std::vector<std::pair<std::int32_t, std::int32_t>>;  // (slot, head)

  AncestorHeads() = default;
  // `owned[w]` lists node w's pairs; a node's weight is owned[w].size().
  AncestorHeads(const SuffixTree& tree, std::int32_t width, std::vector<Owned> owned,
                std::int64_t threshold);

  std::int32_t width() const { return width_; }
  bool special(std::int32_t u) const { return special_[u]; }
  std::int32_t special_count() const { return special_count_; }
  std::int32_t nearest_special(std::int32_t u) const { return nearest_[u]; }
  const Owned& owned(std::int32_t u) const { return owned_[u]; }

  // The array of u: the stored one for special nodes, otherwise built into
  // `scratch`. Adds the work spent to `work`.
  const std::vector<std::int32_t>& heads(std::int32_t u, std::vector<std::int32_t>& scratch,
                                         std::uint64_t& work) const;

  // Builds u's array from the stored array of its nearest special proper
  // ancestor.
  void construct_on_path(std::int32_t u, std::vector<std::int32_t>& out,
                         std::uint64_t& work) const;

  // Sum of path weights from each node to its nearest special ancestor,
  // maximised over nodes (excluding the special ancestor itself).
  std::int64_t max_path_weight() const;
  std::uint64_t build_work() const { return build_work_; }

 private:
  std::vector<std::int32_t> parent_;
  std::int32_t width_ = 0;
  std::vector<Owned> owned_;
  std::vector<bool> special_;
  std::int32_t special_count_ = 0;
  std::vector<std::int32_t> nearest_;
  std::unordered_map<std::int32_t, std::vector<std::int32_t>> stored_;
  std::uint64_t build_work_ = 0;
};

}  // namespace gapmatch

#endif  // GAPMATCH_TREE_ARRAYS_H_
