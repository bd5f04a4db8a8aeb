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

#ifndef HORIZON_INFERENCE_ENGINE_H_
#define HORIZON_INFERENCE_ENGINE_H_

#include <span>
#include <string_view>

#include "horizon/common/clock.h"
#include "horizon/inference/backend.h"
#include "horizon/inference/prompt.h"
#include "horizon/inference/trajectory.h"

namespace horizon::inference {

// Runs a forward prompt. t_init is the backend's conclusion; candidates are
// t_init followed by every distinct time asserted by an expiry step.
// Throws the backend's fault, Error(kBackendTimeout) when the deadline passed
// during the call, Error(kBackendSchema) for steps citing unknown chunks and
// Error(kNoVerdict) for an indeterminate conclusion.
InferenceOutcome InferForward(const ReasoningBackend& backend, const PromptBundle& prompt,
                              const Deadline& deadline, int sample = 0);

struct BackwardResult {
  ReasoningTrajectory trajectory;
  double s_self = 0.0;
};

// Runs a backward prompt; `forward` replaces whatever forward trajectory the
// prompt carries. Same error contract as InferForward, plus
// Error(kBackendSchema) when the backend omits its self score.
BackwardResult VerifyBackward(const ReasoningBackend& backend, const PromptBundle& prompt,
                              const ReasoningTrajectory& forward, const Deadline& deadline,
                              int sample = 0);

// Records the backward pass on `outcome`: stores the trajectory and s_self
// and appends newly asserted expiry times and a moved conclusion to the
// candidate list.
void ApplyBackward(InferenceOutcome& outcome, BackwardResult backward);

// Forward pass, then a backward stress test of t_init.
InferenceOutcome ForwardBackward(const ReasoningBackend& backend,
                                 const extraction::QueryAnchor& anchor,
                                 const extraction::FocusedChunkSet& focus,
                                 const temporal::TimePoint& search_time,
                                 std::span<const Exemplar> exemplars, std::string_view domain,
                                 const Deadline& deadline, int sample = 0);

}  // namespace horizon::inference

#endif  // HORIZON_INFERENCE_ENGINE_H_
