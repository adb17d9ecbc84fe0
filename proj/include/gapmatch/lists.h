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

// Small building blocks shared by the streaming engines.

#ifndef GAPMATCH_LISTS_H_
#define GAPMATCH_LISTS_H_

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace gapmatch {

// A family of intrusive doubly-linked lists over a fixed universe of
// entries. Every entry belongs to at most one list at a time and carries the
// time it was last pushed. push_front on a linked entry moves it to the
// head, so each list is ordered by push time, most recent first.
class ReportingLists {
 public:
  static constexpr std::int32_t kNil = -1;

  ReportingLists() = default;
  ReportingLists(std::int32_t num_lists, std::int32_t num_entries)
      : head_(num_lists, kNil),
        next_(num_entries, kNil),
        prev_(num_entries, kNil),
        owner_(num_entries, kNil),
        time_(num_entries, 0) {}

  void push_front(std::int32_t list, std::int32_t entry, std::int64_t time) {
    if (owner_[entry] != kNil) unlink(entry);
    owner_[entry] = list;
    time_[entry] = time;
    prev_[entry] = kNil;
    next_[entry] = head_[list];
    if (head_[list] != kNil) prev_[head_[list]] = entry;
    head_[list] = entry;
  }

  void unlink(std::int32_t entry) {
    std::int32_t list = owner_[entry];
    if (list == kNil) return;
    if (prev_[entry] != kNil) {
      next_[prev_[entry]] = next_[entry];
    } else {
      head_[list] = next_[entry];
    }
    if (next_[entry] != kNil) prev_[next_[entry]] = prev_[entry];
    owner_[entry] = kNil;
    next_[entry] = prev_[entry] = kNil;
  }

  // Unlinks `entry` and everything after it; returns the number removed.
  std::int64_t truncate_from(std::int32_t entry) {
    std::int64_t removed = 0;
    while (entry != kNil) {
      std::int32_t nxt = next_[entry];
      unlink(entry);
      ++removed;
      entry = nxt;
    }
    return removed;
  }

  bool linked(std::int32_t entry) const { return owner_[entry] != kNil; }
  std::int32_t head(std::int32_t list) const { return head_[list]; }
  std::int32_t next(std::int32_t entry) const { return next_[entry]; }
  std::int64_t time(std::int32_t entry) const { return time_[entry]; }
  std::int32_t num_entries() const { return static_cast<std::int32_t>(next_.size()); }

  std::int64_t linked_count() const {
    std::int64_t c = 0;
    for (auto o : owner_) c += o != kNil;
    return c;
  }

  void clear() {
    for (std::size_t e = 0; e < owner_.size(); ++e) {
      owner_[e] = next_[e] = prev_[e] = kNil;
    }
    for (auto& h : head_) h = kNil;
  }

 private:
  std::vector<std::int32_t> head_;
  std::vector<std::int32_t> next_;
  std::vector<std::int32_t> prev_;
  std::vector<std::int32_t> owner_;
  std::vector<std::int64_t> time_;
};

// Fixed-capacity ring indexed by absolute position: holds the value for
// positions (p - capacity, p] after writing p.
template <class T>
class PositionRing {
 public:
  PositionRing() = default;
  explicit PositionRing(std::size_t capacity) : slots_(capacity == 0 ? 1 : capacity) {}

  T& at(std::int64_t position) {
    return slots_[static_cast<std::size_t>(position) % slots_.size()];
  }
  const T& at(std::int64_t position) const {
    return slots_[static_cast<std::size_t>(position) % slots_.size()];
  }
  std::size_t capacity() const { return slots_.size(); }

 private:
  std::vector<T> slots_;
};

}  // namespace gapmatch

#endif  // GAPMATCH_LISTS_H_
