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

#include "horizon/inference/engine.h"

#include <algorithm>

#include "horizon/common/error.h"

namespace horizon::inference {
namespace {

void CheckCitations(const ReasoningTrajectory& t, std::size_t chunk_count) {
  for (const auto& s : t.steps) {
    if (s.chunk_id < 0 || static_cast<std::size_t>(s.chunk_id) > chunk_count) {
      throw Error(ErrorCode::kBackendSchema,
                  "step cites unknown chunk " + std::to_string(s.chunk_id));
    }
  }
}

BackendResponse Call(const ReasoningBackend& backend, const PromptBundle& prompt,
                     const Deadline& deadline, int sample) {
  if (deadline.Expired()) throw Error(ErrorCode::kBackendTimeout, "deadline exceeded");
  BackendResponse r = backend.Complete(prompt, sample, deadline);
  if (deadline.Expired()) {
    throw Error(ErrorCode::kBackendTimeout,
                std::string(backend.name()) + " backend exceeded its deadline");
  }
  CheckCitations(r.trajectory, prompt.chunks.size());
  return r;
}

void AddCandidate(std::vector<temporal::TimePoint>& candidates, const temporal::TimePoint& t) {
  if (std::find(candidates.begin(), candidates.end(), t) == candidates.end()) {
    candidates.push_back(t);
  }
}

}  // namespace

InferenceOutcome InferForward(const ReasoningBackend& backend, const PromptBundle& prompt,
                              const Deadline& deadline, int sample) {
  if (prompt.mode != PromptMode::kForward) {
    throw Error(ErrorCode::kInvalidArgument, "InferForward needs a forward prompt");
  }
  BackendResponse r = Call(backend, prompt, deadline, sample);
  if (!r.trajectory.conclusion) throw Error(ErrorCode::kNoVerdict, "no verdict");

  InferenceOutcome out;
  out.t_init = *r.trajectory.conclusion;
  out.candidates.push_back(out.t_init);
  for (const auto& s : r.trajectory.steps) {
    if (s.kind == StepKind::kExpiry && s.time) AddCandidate(out.candidates, *s.time);
  }
  out.forward = std::move(r.trajectory);
  out.event_class = std::move(r.event_class);
  return out;
}

BackwardResult VerifyBackward(const ReasoningBackend& backend, const PromptBundle& prompt,
                              const ReasoningTrajectory& forward, const Deadline& deadline,
                              int sample) {
  if (prompt.mode != PromptMode::kBackward || !prompt.candidate) {
    throw Error(ErrorCode::kInvalidArgument, "VerifyBackward needs a backward prompt");
  }
  BackendResponse r;
  if (prompt.forward == forward) {
    r = Call(backend, prompt, deadline, sample);
  } else {
    PromptBundle copy = prompt;
    copy.forward = forward;
    r = Call(backend, copy, deadline, sample);
  }
  if (!r.self_score) throw Error(ErrorCode::kBackendSchema, "backward pass without self score");
  return {std::move(r.trajectory), std::clamp(*r.self_score, 0.0, 1.0)};
}

void ApplyBackward(InferenceOutcome& outcome, BackwardResult backward) {
  for (const auto& s : backward.trajectory.steps) {
    if (s.kind == StepKind::kExpiry && s.time) AddCandidate(outcome.candidates, *s.time);
  }
  if (backward.trajectory.conclusion) AddCandidate(outcome.candidates, *backward.trajectory.conclusion);
  outcome.backward = std::move(backward.trajectory);
  outcome.s_self = backward.s_self;
}

InferenceOutcome ForwardBackward(const ReasoningBackend& backend,
                                 const extraction::QueryAnchor& anchor,
                                 const extraction::FocusedChunkSet& focus,
                                 const temporal::TimePoint& search_time,
                                 std::span<const Exemplar> exemplars, std::string_view domain,
                                 const Deadline& deadline, int sample) {
  PromptBundle fwd = BuildPrompt(anchor, focus, search_time, exemplars, domain, PromptMode::kForward);
  InferenceOutcome outcome = InferForward(backend, fwd, deadline, sample);
  PromptBundle bwd = BuildPrompt(anchor, focus, search_time, exemplars, domain,
                                 PromptMode::kBackward, outcome.t_init, &outcome.forward);
  ApplyBackward(outcome, VerifyBackward(backend, bwd, outcome.forward, deadline, sample));
  return outcome;
}

}  // namespace horizon::inference
