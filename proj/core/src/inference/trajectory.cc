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

#include "horizon/inference/trajectory.h"

namespace horizon::inference {

std::string_view StepKindName(StepKind kind) {
  switch (kind) {
    case StepKind::kEvidence: return "evidence";
    case StepKind::kExpiry: return "expiry";
    case StepKind::kCheck: return "check";
  }
  return "evidence";
}

std::optional<StepKind> StepKindFromName(std::string_view name) {
  if (name == "evidence") return StepKind::kEvidence;
  if (name == "expiry") return StepKind::kExpiry;
  if (name == "check") return StepKind::kCheck;
  return std::nullopt;
}

}  // namespace horizon::inference
