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

#ifndef GAPMATCH_TESTS_TEST_SUPPORT_H_
#define GAPMATCH_TESTS_TEST_SUPPORT_H_

#include <string>
#include <string_view>
#include <vector>

#include "gapmatch/engine.h"

namespace gapmatch::testing {

inline EngineConfig config(EngineKind kind, ReportMode mode) {
  EngineConfig c;
  c.kind = kind;
  c.mode = mode;
  return c;
}

inline std::vector<Occurrence> run(std::string_view dict, std::string_view text,
                                   EngineKind kind = EngineKind::kOrientation,
                                   ReportMode mode = ReportMode::kDedup) {
  return match_all(compile(parse_dictionary(dict)), text, config(kind, mode));
}

inline std::string render(const std::vector<Occurrence>& occ) {
  std::string out;
  for (const auto& o : occ) out += format_occurrence(o) + '\n';
  return out;
}

}  // namespace gapmatch::testing

#endif  // GAPMATCH_TESTS_TEST_SUPPORT_H_
