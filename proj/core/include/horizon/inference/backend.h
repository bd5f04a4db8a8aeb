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

#ifndef HORIZON_INFERENCE_BACKEND_H_
#define HORIZON_INFERENCE_BACKEND_H_

#include <optional>
#include <string>
#include <string_view>

#include "horizon/common/clock.h"
#include "horizon/inference/prompt.h"
#include "horizon/inference/trajectory.h"

namespace horizon::inference {

struct BackendResponse {
  ReasoningTrajectory trajectory;
  // Required for backward prompts, in [0, 1].
  std::optional<double> self_score;
  // Event class the backend settled on, when it reports one.
  std::string event_class;

  bool operator==(const BackendResponse&) const = default;
};

// Anything that can reason over a PromptBundle. Implementations must accept
// concurrent calls. Failures are reported as Error with one of the backend
// fault codes (timeout, schema, transport).
class ReasoningBackend {
 public:
  virtual ~ReasoningBackend() = default;

  // `sample` distinguishes repeated draws for backends that sample.
  virtual BackendResponse Complete(const PromptBundle& prompt, int sample,
                                   const Deadline& deadline) const = 0;

  virtual bool supports_sampling() const { return false; }
  virtual std::string_view name() const = 0;
};

}  // namespace horizon::inference

#endif  // HORIZON_INFERENCE_BACKEND_H_
