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

#ifndef HORIZON_INFERENCE_RESPONSE_SCHEMA_H_
#define HORIZON_INFERENCE_RESPONSE_SCHEMA_H_

#include <cstddef>
#include <string>
#include <string_view>

#include "horizon/inference/backend.h"

namespace horizon::inference {

// Structured model output:
//   {"steps": [{"kind": "evidence|expiry|check", "claim": "...",
//               "chunk_id": 1, "time": "2025-05-30" | null}],
//    "conclusion": "2025-06-02" | "indeterminate",
//    "self_score": 0.75,          // required in backward mode
//    "event_class": "..."}        // optional
// Unknown keys, missing fields, bad dates and chunk ids outside
// [0, chunk_count] are rejected with Error(kBackendSchema). self_score is
// clamped to [0, 1]; non-finite scores are rejected.
BackendResponse ParseResponse(std::string_view text, PromptMode mode, std::size_t chunk_count);

std::string SerializeResponse(const BackendResponse& response);

// JSON schema sent with each remote request.
const std::string& ResponseSchemaJson();

}  // namespace horizon::inference

#endif  // HORIZON_INFERENCE_RESPONSE_SCHEMA_H_
