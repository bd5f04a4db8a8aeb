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

#ifndef HORIZON_INFERENCE_TRAJECTORY_H_
#define HORIZON_INFERENCE_TRAJECTORY_H_

#include <optional>
#include <string>
#include <vector>

#include "horizon/temporal/time_point.h"

namespace horizon::inference {

enum class StepKind {
  kEvidence,  // reads an event time out of a chunk
  kExpiry,    // asserts a possible expiration horizon
  kCheck,     // backward verification of an earlier step
};

std::string_view StepKindName(StepKind kind);
std::optional<StepKind> StepKindFromName(std::string_view name);

struct ReasoningStep {
  StepKind kind = StepKind::kEvidence;
  std::string claim;
  // 1-based chunk id in the prompt; 0 when the step cites no chunk.
  int chunk_id = 0;
  std::optional<temporal::TimePoint> time;

  bool operator==(const ReasoningStep&) const = default;
};

struct ReasoningTrajectory {
  std::vector<ReasoningStep> steps;
  // nullopt means "indeterminate".
  std::optional<temporal::TimePoint> conclusion;

  bool operator==(const ReasoningTrajectory&) const = default;
};

struct InferenceOutcome {
  temporal::TimePoint t_init = temporal::TimePoint::Year(1970);
  // Always contains t_init, first.
  std::vector<temporal::TimePoint> candidates;
  ReasoningTrajectory forward;
  ReasoningTrajectory backward;
  double s_self = 0.0;
  std::string event_class;

  bool operator==(const InferenceOutcome&) const = default;
};

}  // namespace horizon::inference

#endif  // HORIZON_INFERENCE_TRAJECTORY_H_
