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

#include "gapmatch/engine.h"

#include <algorithm>
#include <optional>
#include <string>

#include "engine_parts.h"

namespace gapmatch {

std::string_view engine_name(EngineKind kind) {
  return kind == EngineKind::kThreshold ? "threshold" : "orientation";
}

EngineKind parse_engine_kind(std::string_view name) {
  if (name == "orientation") return EngineKind::kOrientation;
  if (name == "threshold") return EngineKind::kThreshold;
  throw std::invalid_argument("unknown engine '" + std::string(name) + "'");
}

std::string format_occurrence(const Occurrence& occ) {
  std::string line = std::to_string(occ.end) + '\t' + std::to_string(occ.pattern);
  if (occ.witness) line += '\t' + std::to_string(*occ.witness);
  return line;
}

CompiledDictionary::CompiledDictionary(std::vector<GappedPattern> input)
    : patterns(std::move(input)),
      stats(compute_stats(patterns)),
      automaton(patterns),
      graph(build_graph(patterns, automaton.index())),
      degeneracy(degeneracy_orient(graph)),
      split(classify_heavy(graph, std::max<std::int64_t>(stats.lsc, 1))),
      light_orientation(threshold_orient(graph, split)),
      tree(automaton.build_suffix_tree()) {}

std::shared_ptr<const CompiledDictionary> compile(std::vector<GappedPattern> patterns) {
  return std::make_shared<const CompiledDictionary>(std::move(patterns));
}

struct EngineParts {
  detail::TimeStore store;
  std::optional<detail::UnboundedPart> unbounded;
  std::optional<detail::UniformPart> uniform;
  std::optional<detail::IntervalPart> interval;
  std::optional<detail::HeavyChainPart> chain;
  std::optional<detail::ActiveWindowPart> window;
  bool bounded = false;      // some edge has a bounded gap
  bool chain_bounded = false;
  std::int64_t delay = 0;    // activation delay of bounded windows
  std::int64_t horizon = 0;  // oldest arrival that can still be a witness
  PositionRing<Automaton::State> states;
  ArrivalEvent event;
  std::int64_t history_held = 0;
};

Matcher::Matcher(std::shared_ptr<const CompiledDictionary> dictionary, EngineConfig config)
    : dict_(std::move(dictionary)),
      config_(config),
      parts_(std::make_unique<EngineParts>()),
      state_(dict_->automaton.root()) {
  const CompiledDictionary& d = *dict_;
  const DictGraph& g = d.graph;
  const DictionaryStats& st = d.stats;
  EngineParts& p = *parts_;
  p.store = detail::TimeStore(g.num_left);

  std::vector<std::int32_t> light_unbounded, light_bounded, heavy_unbounded, heavy_bounded;
  const bool threshold = config_.kind == EngineKind::kThreshold;
  const auto& tail =
      threshold ? d.light_orientation.tail : d.degeneracy.orientation.tail;
  for (std::int32_t e = 0; e < static_cast<std::int32_t>(g.edges.size()); ++e) {
    const bool bounded = g.edges[e].bounds.has_value();
    const bool heavy_heavy = threshold && tail[e] == Orientation::kUnoriented;
    auto& bucket = heavy_heavy ? (bounded ? heavy_bounded : heavy_unbounded)
                               : (bounded ? light_bounded : light_unbounded);
    bucket.push_back(e);
  }
  auto left_responsible = [&](std::int32_t e) { return tail[e] == g.edges[e].left; };
  auto on_left = [](std::int32_t) { return true; };

  std::vector<std::int32_t> right_length(g.num_right);
  for (std::int32_t v = 0; v < g.num_right; ++v) right_length[v] = d.automaton.right_length(v);
  const std::int64_t peel_base = ceil_sqrt(std::max<std::int64_t>(st.lsc, 1) * st.d);

  p.bounded = !light_bounded.empty() || !heavy_bounded.empty();
  const bool uniform = st.regime == GapRegime::kUniform;
  if (p.bounded) {
    p.delay = st.alpha_star;
    p.horizon = st.beta_star + st.max_second;
    if (st.beta_star > config_.max_horizon - st.max_second) {
      throw EngineError("gap bound " + std::to_string(st.beta_star) +
                        " exceeds the configured history limit");
    }
    p.states = PositionRing<Automaton::State>(static_cast<std::size_t>(p.horizon) + 2);
  }
  if (!light_unbounded.empty()) {
    p.unbounded.emplace(detail::make_groups(g, light_unbounded, left_responsible), g.num_left,
                        g.num_right);
  }
  if (!light_bounded.empty()) {
    auto groups = detail::make_groups(g, light_bounded, left_responsible);
    if (uniform) {
      p.uniform.emplace(std::move(groups), g.num_left, g.num_right, st.alpha_star, st.beta_star);
    } else {
      p.interval.emplace(std::move(groups), g.num_left, g.num_right, right_length, p.horizon);
    }
  }
  if (!heavy_bounded.empty()) {
    auto groups = detail::make_groups(g, heavy_bounded, on_left);
    if (uniform) {
      p.chain.emplace(std::move(groups), d.tree, g.num_right, peel_base, true, st.alpha_star,
                      st.beta_star, st.max_second);
      p.chain_bounded = true;
    } else {
      p.window.emplace(std::move(groups), d.tree, right_length, peel_base, st.alpha_star,
                       st.max_second, config_.max_window_span);
    }
  }
  if (!heavy_unbounded.empty()) {
    p.chain.emplace(detail::make_groups(g, heavy_unbounded, on_left), d.tree, g.num_right,
                    peel_base, false, 0, 0, st.max_second);
  }
  p.store.keep_history = config_.mode == ReportMode::kWitness &&
                         (!light_unbounded.empty() || !heavy_unbounded.empty());
}

Matcher::~Matcher() = default;
Matcher::Matcher(Matcher&&) noexcept = default;
Matcher& Matcher::operator=(Matcher&&) noexcept = default;

std::span<const Occurrence> Matcher::step(unsigned char c) {
  const Automaton& automaton = dict_->automaton;
  EngineParts& p = *parts_;
  detail::TimeStore& store = p.store;
  const std::int64_t i = ++position_;
  std::uint64_t work = 1;
  out_.clear();

  state_ = automaton.next(state_, c);
  if (p.bounded) p.states.at(i) = state_;
  p.event.clear();
  p.event.position = i;
  automaton.collect(state_, p.event);
  work += p.event.r_arrivals.size() + p.event.l_arrivals.size();
  detail::Sink sink{config_.mode, i, &out_, &work};

  if (p.bounded) {
    if (p.chain_bounded) p.chain->on_deadlines(i, work);
    if (std::int64_t t = i - p.horizon - 1; t >= 1) {
      automaton.for_each_left(p.states.at(t), [&](std::int32_t u) {
        ++work;
        store.window[u].pop_front();
        --store.held;
        if (store.window[u].empty() && p.uniform) p.uniform->on_window_empty(u, work);
      });
      if (p.interval) p.interval->on_expire(t, work);
    }
    if (std::int64_t t = i - p.delay; t >= 1) {
      const Automaton::State s = p.states.at(t);
      automaton.for_each_left(s, [&](std::int32_t u) {
        ++work;
        store.window[u].push_back(t);
        ++store.held;
        if (p.uniform) p.uniform->on_activate(u, t, work);
      });
      if (std::int32_t deepest = automaton.deepest_left(s); deepest >= 0) {
        if (p.chain_bounded) p.chain->splice(deepest, t, i, work);
        if (p.window) p.window->activate(deepest, t, work);
      }
    }
  }

  for (const Arrival& r : p.event.r_arrivals) {
    if (p.unbounded) p.unbounded->report(r.vertex, r.length, store, sink);
    if (p.uniform) p.uniform->report(r.vertex, r.length, store, sink);
    if (p.interval) p.interval->report(r.vertex, r.length, store, sink);
    if (p.chain) p.chain->report(r.vertex, r.length, store, sink);
    if (p.window) p.window->report(r.vertex, sink);
  }

  for (const Arrival& l : p.event.l_arrivals) {
    const std::int32_t u = l.vertex;
    if (store.first[u] == 0) {
      store.first[u] = i;
      if (p.unbounded) p.unbounded->on_first_arrival(u, i, work);
    }
    if (store.keep_history) {
      store.history[u].push_back(i);
      ++p.history_held;
    }
    if (p.interval) p.interval->on_arrival(u, i, work);
  }
  if (p.chain && !p.chain_bounded && !p.event.l_arrivals.empty()) {
    p.chain->splice(p.event.l_arrivals.front().vertex, i, i, work);
  }

  for (std::int32_t pid : p.event.complete) out_.push_back({pid, i, std::nullopt});
  work += p.event.complete.size();
  std::sort(out_.begin(), out_.end());
  last_work_ = work;
  return out_;
}

std::int64_t Matcher::space_units() const {
  const CompiledDictionary& d = *dict_;
  const EngineParts& p = *parts_;
  std::int64_t units = d.stats.d + d.stats.gapless + d.stats.total_len;
  if (p.bounded) units += static_cast<std::int64_t>(p.states.capacity());
  units += p.store.held + p.history_held;
  if (p.unbounded) units += p.unbounded->linked();
  if (p.uniform) units += p.uniform->linked();
  if (p.interval) units += p.interval->live_intervals();
  if (p.chain) units += p.chain->linked() + p.chain->pending_deadlines();
  if (p.window) units += p.window->bucket_entries();
  return units;
}

std::int32_t Matcher::special_vertices() const {
  const EngineParts& p = *parts_;
  std::int32_t n = 0;
  if (p.chain) n += p.chain->heads().special_count();
  if (p.window) n += p.window->heads().special_count();
  return n;
}

std::int64_t Matcher::resident_arrays() const { return special_vertices(); }

void run_text(Matcher& matcher, std::string_view text,
              const std::function<void(std::span<const Occurrence>)>& sink) {
  for (char c : text) {
    auto out = matcher.step(static_cast<unsigned char>(c));
    if (!out.empty()) sink(out);
  }
}

std::vector<Occurrence> match_all(std::shared_ptr<const CompiledDictionary> dictionary,
                                  std::string_view text, EngineConfig config) {
  Matcher matcher(std::move(dictionary), config);
  std::vector<Occurrence> all;
  run_text(matcher, text, [&](std::span<const Occurrence> out) {
    all.insert(all.end(), out.begin(), out.end());
  });
  return all;
}

}  // namespace gapmatch
