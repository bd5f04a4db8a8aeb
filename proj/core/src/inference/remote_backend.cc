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

#include "horizon/inference/remote_backend.h"

#include <semaphore>

#include "horizon/common/error.h"
#include "horizon/inference/response_schema.h"
#include "httplib.h"
#include "json.hpp"

namespace horizon::inference {
namespace {

constexpr std::ptrdiff_t kMaxPermits = 1024;

struct Target {
  std::string origin;  // scheme://host[:port]
  std::string path;
};

Target SplitEndpoint(const std::string& endpoint) {
  const std::string scheme = "http://";
  if (endpoint.rfind(scheme, 0) != 0) {
    throw Error(ErrorCode::kInvalidArgument,
                "remote endpoint must start with http:// : '" + endpoint + "'");
  }
  const auto slash = endpoint.find('/', scheme.size());
  if (slash == std::string::npos) return {endpoint, "/"};
  return {endpoint.substr(0, slash), endpoint.substr(slash)};
}

// Releases a permit on scope exit.
class Permit {
 public:
  explicit Permit(std::counting_semaphore<kMaxPermits>& sem) : sem_(sem) { sem_.acquire(); }
  ~Permit() { sem_.release(); }
  Permit(const Permit&) = delete;
  Permit& operator=(const Permit&) = delete;

 private:
  std::counting_semaphore<kMaxPermits>& sem_;
};

}  // namespace

struct RemoteBackend::Impl {
  RemoteBackendOptions options;
  Target target;
  mutable std::counting_semaphore<kMaxPermits> permits;

  explicit Impl(RemoteBackendOptions o)
      : options(std::move(o)),
        target(SplitEndpoint(options.endpoint)),
        permits(std::clamp<std::ptrdiff_t>(options.max_concurrency, 1, kMaxPermits)) {}
};

RemoteBackend::RemoteBackend(RemoteBackendOptions options)
    : impl_(std::make_unique<Impl>(std::move(options))) {}

RemoteBackend::~RemoteBackend() = default;

BackendResponse RemoteBackend::Complete(const PromptBundle& prompt, int sample,
                                        const Deadline& deadline) const {
  nlohmann::json body = {{"prompt", prompt.Render()},
                         {"mode", PromptModeName(prompt.mode)},
                         {"sample", sample},
                         {"chunk_count", prompt.chunks.size()},
                         {"response_schema", nlohmann::json::parse(ResponseSchemaJson())}};
  const std::string payload = body.dump();

  Permit permit(impl_->permits);
  for (int attempt = 0; attempt < 2; ++attempt) {
    const Millis left = deadline.Remaining();
    if (left.count() <= 0) break;
    httplib::Client client(impl_->target.origin);
    const auto budget = std::chrono::duration_cast<std::chrono::microseconds>(left);
    client.set_connection_timeout(
        std::min(budget, std::chrono::microseconds(Millis(impl_->options.connect_timeout_ms))));
    client.set_read_timeout(budget);
    client.set_write_timeout(budget);

    auto res = client.Post(impl_->target.path, payload, "application/json");
    if (!res) {
      const auto err = res.error();
      if (err == httplib::Error::Read || err == httplib::Error::Write ||
          err == httplib::Error::ConnectionTimeout) {
        continue;  // timed out; retry once
      }
      throw Error(ErrorCode::kBackendTransport,
                  "remote backend: " + httplib::to_string(err));
    }
    if (res->status != 200) {
      throw Error(ErrorCode::kBackendTransport,
                  "remote backend: HTTP " + std::to_string(res->status));
    }
    if (deadline.Expired()) break;
    return ParseResponse(res->body, prompt.mode, prompt.chunks.size());
  }
  throw Error(ErrorCode::kBackendTimeout, "remote backend: deadline exceeded");
}

}  // namespace horizon::inference
