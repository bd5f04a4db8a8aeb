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

#ifndef HORIZON_INFERENCE_PROMPT_H_
#define HORIZON_INFERENCE_PROMPT_H_

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "horizon/extraction/query_anchor.h"
#include "horizon/extraction/scoring.h"
#include "horizon/inference/trajectory.h"
#include "horizon/temporal/time_point.h"

namespace horizon::inference {

enum class PromptMode { kForward, kBackward };

std::string_view PromptModeName(PromptMode mode);

// A worked example shown to the model. Stored one JSON object per line:
//   {"domain": "breaking_news", "query": "...", "chunks": ["..."],
//    "reasoning": "...", "expiry": "2025-06-02"}
struct Exemplar {
  std::string domain;
  std::string query;
  std::vector<std::string> chunks;
  std::string reasoning;
  std::string expiry;

  bool operator==(const Exemplar&) const = default;
};

std::vector<Exemplar> ReadExemplars(std::istream& in);
std::vector<Exemplar> LoadExemplars(const std::string& path);

struct PromptBundle {
  std::string query;
  std::vector<std::string> keywords;
  // Chunk N in the rendering is chunks[N - 1].
  std::vector<extraction::FocusedChunk> chunks;
  temporal::TimePoint search_time = temporal::TimePoint::Year(1970);
  std::vector<Exemplar> few_shot;
  std::vector<std::string> negative_constraints;
  PromptMode mode = PromptMode::kForward;
  // Backward mode only.
  std::optional<temporal::TimePoint> candidate;
  ReasoningTrajectory forward;

  // Deterministic text handed to a language model.
  std::string Render() const;
};

// At most this many exemplars are attached to a prompt.
inline constexpr std::size_t kMaxExemplars = 2;

// Exemplars tagged `domain` are preferred; "general" ones fill the rest.
// Throws Error(kNoEvidence) when the focus set is empty and
// Error(kInvalidArgument) for a backward prompt without a candidate.
PromptBundle BuildPrompt(const extraction::QueryAnchor& anchor,
                         const extraction::FocusedChunkSet& focus,
                         const temporal::TimePoint& search_time,
                         std::span<const Exemplar> exemplars, std::string_view domain,
                         PromptMode mode,
                         const std::optional<temporal::TimePoint>& candidate = std::nullopt,
                         const ReasoningTrajectory* forward = nullptr);

}  // namespace horizon::inference

#endif  // HORIZON_INFERENCE_PROMPT_H_
