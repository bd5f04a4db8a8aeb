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

#include "horizon/service/http_service.h"

#include <thread>
#include <vector>

#include "horizon/common/error.h"
#include "httplib.h"
#include "json.hpp"
#include "spdlog/spdlog.h"

namespace horizon::service {
namespace {

using nlohmann::json;
using temporal::TimePoint;

HttpReply Json(int status, const json& body) { return {status, body.dump()}; }

HttpReply BadRequest(const std::vector<std::string>& errors) {
  return Json(400, json{{"errors", errors}});
}

// Parses an object body, recording problems in `errors`.
std::optional<json> ParseObject(std::string_view body, std::vector<std::string>& errors) {
  json j = json::parse(body, nullptr, false);
  if (j.is_discarded()) {
    errors.push_back("body is not valid JSON");
    return std::nullopt;
  }
  if (!j.is_object()) {
    errors.push_back("body must be a JSON object");
    return std::nullopt;
  }
  return j;
}

std::optional<std::string> StringField(const json& j, const char* key,
                                       std::vector<std::string>& errors) {
  if (!j.contains(key)) {
    errors.push_back(std::string(key) + ": missing");
    return std::nullopt;
  }
  if (!j[key].is_string()) {
    errors.push_back(std::string(key) + ": must be a string");
    return std::nullopt;
  }
  return j[key].get<std::string>();
}

std::optional<TimePoint> TimeField(const json& j, const char* key, bool day_only,
                                   std::vector<std::string>& errors) {
  auto text = StringField(j, key, errors);
  if (!text) return std::nullopt;
  auto t = TimePoint::Parse(*text);
  if (!t) {
    errors.push_back(std::string(key) + ": not a calendar point");
    return std::nullopt;
  }
  if (day_only && t->granularity() != temporal::Granularity::kDay) {
    errors.push_back(std::string(key) + ": must be a day (YYYY-MM-DD)");
    return std::nullopt;
  }
  return t;
}

void RejectUnknown(const json& j, std::initializer_list<const char*> known,
                   std::vector<std::string>& errors) {
  for (const auto& [key, _] : j.items()) {
    bool ok = false;
    for (const char* k : known) ok = ok || key == k;
    if (!ok) errors.push_back(key + ": unknown field");
  }
}

json OptionalTime(const std::optional<TimePoint>& t) {
  return t ? json(t->ToString()) : json(nullptr);
}

json ThresholdJson(const signal::ThresholdResult& r) {
  json out{{"t_exp", OptionalTime(r.t_exp)},
           {"provenance", signal::ProvenanceName(r.provenance)},
           {"s_self", r.s_self}};
  if (!r.reason.empty()) out["reason"] = r.reason;
  return out;
}

json SignalJson(const signal::ExpirySignal& s) {
  return {{"f_exp", s.f_exp},
          {"t_exp_used", OptionalTime(s.t_exp_used)},
          {"provenance", signal::ProvenanceName(s.provenance)},
          {"breaker_state", signal::BreakerStateName(s.breaker_state)}};
}

}  // namespace

HttpHandlers::HttpHandlers(signal::ThresholdService& service, bool enable_test_hooks)
    : service_(service), enable_test_hooks_(enable_test_hooks) {}

HttpReply HttpHandlers::Threshold(std::string_view body) const {
  std::vector<std::string> errors;
  auto j = ParseObject(body, errors);
  if (!j) return BadRequest(errors);
  auto query = StringField(*j, "query", errors);
  auto search_time = TimeField(*j, "search_time", true, errors);
  RejectUnknown(*j, {"query", "search_time"}, errors);
  if (query && query->empty()) errors.push_back("query: must not be empty");
  if (!errors.empty()) return BadRequest(errors);

  signal::ThresholdResult result;
  try {
    result = service_.GetThreshold({*query, *search_time, {}});
  } catch (const std::exception& e) {
    spdlog::warn("threshold request failed: {}", e.what());
    result.reason = e.what();
  }
  return Json(200, ThresholdJson(result));
}

HttpReply HttpHandlers::Signal(std::string_view body) const {
  std::vector<std::string> errors;
  auto j = ParseObject(body, errors);
  if (!j) return BadRequest(errors);
  auto query = StringField(*j, "query", errors);
  auto doc_time = TimeField(*j, "doc_time", false, errors);
  auto search_time = TimeField(*j, "search_time", true, errors);
  RejectUnknown(*j, {"query", "doc_time", "search_time"}, errors);
  if (query && query->empty()) errors.push_back("query: must not be empty");
  if (!errors.empty()) return BadRequest(errors);

  signal::ExpirySignal sig;
  try {
    sig = service_.MakeSignal({*query, *search_time, {}}, *doc_time);
  } catch (const std::exception& e) {
    spdlog::warn("signal request failed: {}", e.what());
    sig.breaker_state = service_.breaker().state();
  }
  return Json(200, SignalJson(sig));
}

HttpReply HttpHandlers::Health() const {
  const auto snap = service_.breaker().Snapshot();
  const auto stats = service_.stats();
  return Json(200, json{{"status", "ok"},
                        {"breaker_state", signal::BreakerStateName(snap.state)},
                        {"consecutive_failures", snap.consecutive_failures},
                        {"cache_entries", service_.cache().size()},
                        {"requests", stats.requests},
                        {"cache_hits", stats.cache_hits},
                        {"source_calls", stats.source_calls},
                        {"fallbacks", stats.fallbacks}});
}

HttpReply HttpHandlers::ForceBreaker(std::string_view body) const {
  if (!enable_test_hooks_) return Json(404, json{{"errors", {"not found"}}});
  std::vector<std::string> errors;
  auto j = ParseObject(body, errors);
  if (!j) return BadRequest(errors);
  auto state = StringField(*j, "state", errors);
  RejectUnknown(*j, {"state"}, errors);
  if (state && *state != "open" && *state != "closed") {
    errors.push_back("state: must be open or closed");
  }
  if (!errors.empty()) return BadRequest(errors);
  if (*state == "open") {
    service_.breaker().ForceOpen();
  } else {
    service_.breaker().ForceClosed();
  }
  return Json(200, json{{"breaker_state", signal::BreakerStateName(service_.breaker().state())}});
}

struct HttpService::Impl {
  Impl(signal::ThresholdService& service, HttpServiceOptions opts)
      : options(std::move(opts)), handlers(service, options.enable_test_hooks) {
    auto reply = [](httplib::Response& res, const HttpReply& r) {
      res.status = r.status;
      res.set_content(r.body, "application/json");
    };
    server.Post("/v1/threshold", [this, reply](const httplib::Request& req, httplib::Response& res) {
      reply(res, handlers.Threshold(req.body));
    });
    server.Post("/v1/signal", [this, reply](const httplib::Request& req, httplib::Response& res) {
      reply(res, handlers.Signal(req.body));
    });
    server.Get("/healthz", [this, reply](const httplib::Request&, httplib::Response& res) {
      reply(res, handlers.Health());
    });
    server.Post("/v1/test/breaker",
                [this, reply](const httplib::Request& req, httplib::Response& res) {
                  reply(res, handlers.ForceBreaker(req.body));
                });
  }

  void Bind() {
    if (options.port == 0) {
      port = server.bind_to_any_port(options.host);
    } else if (server.bind_to_port(options.host, options.port)) {
      port = options.port;
    } else {
      port = -1;
    }
    if (port <= 0) {
      throw Error(ErrorCode::kIo,
                  "cannot bind " + options.host + ":" + std::to_string(options.port));
    }
  }

  HttpServiceOptions options;
  HttpHandlers handlers;
  httplib::Server server;
  std::thread thread;
  int port = 0;
};

HttpService::HttpService(signal::ThresholdService& service, HttpServiceOptions options)
    : impl_(std::make_unique<Impl>(service, std::move(options))) {}

HttpService::~HttpService() { Stop(); }

int HttpService::Start() {
  impl_->Bind();
  impl_->thread = std::thread([this] { impl_->server.listen_after_bind(); });
  impl_->server.wait_until_ready();
  return impl_->port;
}

void HttpService::Run() {
  impl_->Bind();
  spdlog::info("serving on {}:{}", impl_->options.host, impl_->port);
  impl_->server.listen_after_bind();
}

void HttpService::Stop() {
  impl_->server.stop();
  if (impl_->thread.joinable()) impl_->thread.join();
}

int HttpService::port() const { return impl_->port; }

const HttpHandlers& HttpService::handlers() const { return impl_->handlers; }

}  // namespace horizon::service
