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

#include "horizon/fusion/fusion.h"

#include <algorithm>
#include <cmath>

#include "horizon/common/error.h"

namespace horizon::fusion {

double ExpirationVerdict::SupportFor(const temporal::TimePoint& t) const {
  for (const auto& [candidate, s] : support) {
    if (candidate == t) return s;
  }
  return 0.0;
}

double ChunkWeight(const extraction::FocusedChunk& chunk) { return chunk.authority * chunk.s_rel; }

int AlignmentIndicator(const temporal::TimePoint& candidate, const extraction::FocusedChunk& chunk,
                       const AlignmentContext* context) {
  for (const auto& t : chunk.anchor_times) {
    if (temporal::Aligned(t, candidate)) return 1;
  }
  if (context && context->rules) {
    auto reading = context->rules->Read(chunk, context->profile, context->search_time);
    if (reading && temporal::Aligned(reading->horizon, candidate)) return 1;
  }
  return 0;
}

ExpirationVerdict Fuse(std::span<const temporal::TimePoint> candidates,
                       const extraction::FocusedChunkSet& focus,
                       const inference::InferenceOutcome& outcome,
                       const AlignmentContext* context) {
  if (candidates.empty()) throw Error(ErrorCode::kInvalidArgument, "no candidates to fuse");

  ExpirationVerdict v;
  v.s_self = outcome.s_self;
  v.chunk_count = focus.chunks.size();
  for (const auto& c : candidates) {
    const bool seen = std::any_of(v.support.begin(), v.support.end(),
                                  [&](const auto& e) { return e.first == c; });
    if (!seen) v.support.emplace_back(c, 0.0);
  }
  for (const auto& chunk : focus.chunks) {
    const double w = ChunkWeight(chunk);
    if (w == 0.0) continue;
    for (auto& [candidate, s] : v.support) s += w * AlignmentIndicator(candidate, chunk, context);
  }

  double best = 0.0;
  for (const auto& e : v.support) best = std::max(best, e.second);
  if (best <= 0.0) throw Error(ErrorCode::kUnsupportedVerdict, "unsupported verdict");

  std::optional<temporal::TimePoint> pick;
  std::size_t at_max = 0;
  for (const auto& [candidate, s] : v.support) {
    if (best - s > kSupportTieTolerance * best) continue;
    ++at_max;
    if (!pick || candidate < *pick) pick = candidate;
  }
  v.t_exp = *pick;
  v.tie_broken = at_max > 1;
  return v;
}

}  // namespace horizon::fusion
