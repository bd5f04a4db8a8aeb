// Copyright 2026 The Horizon Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef HORIZON_EVAL_GENERATOR_H_
#define HORIZON_EVAL_GENERATOR_H_

#include <cstdint>
#include <optional>
#include <span>

#include "horizon/eval/corpus.h"
#include "horizon/inference/rule_table.h"

namespace horizon::eval {

struct GeneratorParams {
  std::uint64_t seed = 20250602;
  int num_queries = 500;
  int docs_per_query = 20;
  // Search times are drawn from [first_search_day, first_search_day + span).
  temporal::TimePoint first_search_day = temporal::TimePoint::Day(2024, 1, 1);
  int search_span_days = 700;
};

// An event planted in a synthetic story, with the validity the rule table
// gives its class.
struct PlantedEvent {
  temporal::TimePoint start = temporal::TimePoint::Year(1970);
  int validity_days = 0;
  std::optional<temporal::TimePoint> explicit_expiry;
};

// Ground-truth horizon of a story: the later of (latest start at or before
// the search time) - 1 day and the latest validity end at or before it.
// Events after the search time are ignored. nullopt without usable events.
std::optional<temporal::TimePoint> PlantedHorizon(std::span<const PlantedEvent> events,
                                                  const temporal::TimePoint& search_time);

// Seeded synthetic corpus. Stories come in eight shapes: breaking news and
// disasters (a fresh event superseding an older one weeks earlier), sports
// fixtures with previews, scheduled events, periodic reports, evergreen and
// amended policies, and long-tail topics. Validity periods are read from
// `rules`. Candidates get a uniform relevance grade and label 2 when
// published after the planted horizon, else 0. Same params, same bytes.
Corpus GenerateCorpus(const GeneratorParams& params, const inference::RuleTable& rules);

}  // namespace horizon::eval

#endif  // HORIZON_EVAL_GENERATOR_H_
