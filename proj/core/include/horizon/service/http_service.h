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

#ifndef HORIZON_SERVICE_HTTP_SERVICE_H_
#define HORIZON_SERVICE_HTTP_SERVICE_H_

#include <memory>
#include <string>
#include <string_view>

#include "horizon/signal/threshold_service.h"

namespace horizon::service {

struct HttpReply {
  int status = 200;
  std::string body;  // JSON
};

struct HttpServiceOptions {
  std::string host = "127.0.0.1";
  int port = 8080;  // 0 picks a free port
  bool enable_test_hooks = false;
};

// Request handlers, callable without a socket. Malformed requests get 400
// with an itemized "errors" array; pipeline faults never surface as 5xx and
// are answered with a fallback body instead.
class HttpHandlers {
 public:
  HttpHandlers(signal::ThresholdService& service, bool enable_test_hooks);

  // POST /v1/threshold {"query", "search_time"}
  HttpReply Threshold(std::string_view body) const;
  // POST /v1/signal {"query", "doc_time", "search_time"}
  HttpReply Signal(std::string_view body) const;
  // GET /healthz
  HttpReply Health() const;
  // POST /v1/test/breaker {"state": "open" | "closed"}; 404 unless enabled.
  HttpReply ForceBreaker(std::string_view body) const;

 private:
  signal::ThresholdService& service_;
  bool enable_test_hooks_;
};

// Blocking HTTP front end over HttpHandlers.
class HttpService {
 public:
  HttpService(signal::ThresholdService& service, HttpServiceOptions options);
  ~HttpService();
  HttpService(const HttpService&) = delete;
  HttpService& operator=(const HttpService&) = delete;

  // Binds, then serves on a background thread. Throws Error(kIo) when the
  // address cannot be bound. Returns the bound port.
  int Start();
  // Serves on the calling thread until Stop(); throws Error(kIo) on bind failure.
  void Run();
  void Stop();

  int port() const;
  const HttpHandlers& handlers() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace horizon::service

#endif  // HORIZON_SERVICE_HTTP_SERVICE_H_
