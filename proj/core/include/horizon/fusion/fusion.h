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

#ifndef HORIZON_FUSION_FUSION_H_
#define HORIZON_FUSION_FUSION_H_

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "horizon/extraction/scoring.h"
#include "horizon/inference/rule_table.h"
#include "horizon/inference/trajectory.h"
#include "horizon/temporal/time_point.h"

namespace horizon::fusion {

struct ExpirationVerdict {
  temporal::TimePoint t_exp = temporal::TimePoint::Year(1970);
  // Accumulated weight per distinct candidate, in candidate order. Zero
  // entries are kept for diagnostics.
  std::vector<std::pair<temporal::TimePoint, double>> support;
  double s_self = 0.0;
  std::size_t chunk_count = 0;
  // More than one candidate attained the maximum support.
  bool tie_broken = false;

  double SupportFor(const temporal::TimePoint& t) const;
};

// authority * s_rel
double ChunkWeight(const extraction::FocusedChunk& chunk);

// Lets alignment see what the rule table derives from a chunk.
struct AlignmentContext {
  const inference::RuleTable* rules = nullptr;
  inference::EventProfile profile;
  temporal::TimePoint search_time = temporal::TimePoint::Year(1970);
};

// 1 when some anchor time of the chunk contains, or is contained in, the
// candidate; or when `context` is given and the horizon the rule table reads
// from the chunk lies inside the candidate. Otherwise 0.
int AlignmentIndicator(const temporal::TimePoint& candidate, const extraction::FocusedChunk& chunk,
                       const AlignmentContext* context = nullptr);

// Two supports within this relative distance count as tied.
inline constexpr double kSupportTieTolerance = 1e-12;

// argmax over candidates of sum_c weight(c) * align(candidate, c), ties going
// to the earliest candidate under TimePoint's total order. Throws
// Error(kInvalidArgument) for no candidates and Error(kUnsupportedVerdict)
// when every support is zero.
ExpirationVerdict Fuse(std::span<const temporal::TimePoint> candidates,
                       const extraction::FocusedChunkSet& focus,
                       const inference::InferenceOutcome& outcome,
                       const AlignmentContext* context = nullptr);

}  // namespace horizon::fusion

#endif  // HORIZON_FUSION_FUSION_H_
