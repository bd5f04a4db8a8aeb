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

#ifndef HORIZON_INFERENCE_REMOTE_BACKEND_H_
#define HORIZON_INFERENCE_REMOTE_BACKEND_H_

#include <memory>
#include <string>

#include "horizon/inference/backend.h"

namespace horizon::inference {

struct RemoteBackendOptions {
  // "http://host:port/path"; TLS endpoints are not supported.
  std::string endpoint;
  int max_concurrency = 8;
  // Per-attempt connect timeout; reads use whatever the deadline leaves.
  int connect_timeout_ms = 200;
};

// Posts {"prompt", "mode", "sample", "chunk_count", "response_schema"} as
// JSON and parses the reply with ParseResponse. A timed-out attempt is
// retried once while the deadline allows. At most max_concurrency requests
// are outstanding at any time; further callers wait.
class RemoteBackend final : public ReasoningBackend {
 public:
  explicit RemoteBackend(RemoteBackendOptions options);
  ~RemoteBackend() override;

  BackendResponse Complete(const PromptBundle& prompt, int sample,
                           const Deadline& deadline) const override;
  bool supports_sampling() const override { return true; }
  std::string_view name() const override { return "http"; }

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace horizon::inference

#endif  // HORIZON_INFERENCE_REMOTE_BACKEND_H_
