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

#include "horizon/service/config.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "horizon/common/error.h"
#include "json.hpp"

namespace horizon::service {
namespace {

using nlohmann::json;
using nlohmann::ordered_json;

// Pulls typed values out of one section, collecting problems instead of
// stopping at the first.
class SectionReader {
 public:
  SectionReader(const json& root, std::string name, std::vector<std::string>& errors)
      : name_(std::move(name)), errors_(errors) {
    if (!root.contains(name_)) return;
    section_ = &root.at(name_);
    if (!section_->is_object()) {
      errors_.push_back(name_ + ": must be an object");
      section_ = nullptr;
    }
  }

  template <typename T>
  void Read(const char* key, T& out) {
    seen_.insert(key);
    if (!section_ || !section_->contains(key)) return;
    try {
      out = section_->at(key).get<T>();
    } catch (const json::exception&) {
      errors_.push_back(name_ + "." + key + ": wrong type");
    }
  }

  void RejectUnknown() {
    if (!section_) return;
    for (const auto& [key, _] : section_->items()) {
      if (!seen_.contains(key)) errors_.push_back(name_ + ": unknown key '" + key + "'");
    }
  }

 private:
  std::string name_;
  std::vector<std::string>& errors_;
  const json* section_ = nullptr;
  std::set<std::string> seen_;
};

[[noreturn]] void Fail(const std::string& what, const std::vector<std::string>& errors) {
  std::string msg = what;
  for (const auto& e : errors) msg += "\n  " + e;
  throw Error(ErrorCode::kDataError, msg);
}

std::optional<std::string> ProcessEnv(const char* name) {
  const char* v = std::getenv(name);
  if (!v) return std::nullopt;
  return std::string(v);
}

int ParseEnvInt(const char* name, const std::string& value) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(value, &used);
    if (used == value.size()) return v;
  } catch (const std::exception&) {
  }
  throw Error(ErrorCode::kDataError, std::string(name) + " must be an integer");
}

}  // namespace

Config Config::FromJsonText(std::string_view text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::kDataError, std::string("config is not valid JSON: ") + e.what());
  }
  if (!root.is_object()) throw Error(ErrorCode::kDataError, "config must be a JSON object");

  Config c;
  std::vector<std::string> errors;
  static const std::set<std::string> kSections = {"extraction", "inference", "parser", "backend",
                                                  "breaker",    "cache",     "sanity", "signal",
                                                  "rerank",     "eval",      "service", "seed"};
  for (const auto& [key, _] : root.items()) {
    if (!kSections.contains(key)) errors.push_back("unknown key '" + key + "'");
  }

  SectionReader ex(root, "extraction", errors);
  ex.Read("alpha", c.extraction.alpha);
  ex.Read("window", c.extraction.window);
  ex.Read("tau", c.extraction.tau);
  ex.Read("decay_half_life_days", c.extraction.decay_half_life_days);
  ex.Read("stopwords_path", c.extraction.stopwords_path);
  ex.RejectUnknown();

  SectionReader inf(root, "inference", errors);
  inf.Read("lambda1", c.inference.lambda1);
  inf.Read("lambda2", c.inference.lambda2);
  inf.Read("horizon_norm_days", c.inference.horizon_norm_days);
  inf.Read("samples", c.inference.samples);
  inf.Read("rules_path", c.inference.rules_path);
  inf.Read("exemplars_path", c.inference.exemplars_path);
  inf.RejectUnknown();

  SectionReader parser(root, "parser", errors);
  parser.Read("patterns_path", c.parser.patterns_path);
  parser.RejectUnknown();

  SectionReader be(root, "backend", errors);
  be.Read("kind", c.backend.kind);
  be.Read("endpoint", c.backend.endpoint);
  be.Read("remote_deadline_ms", c.backend.remote_deadline_ms);
  be.Read("oracle_deadline_ms", c.backend.oracle_deadline_ms);
  be.Read("max_concurrency", c.backend.max_concurrency);
  be.RejectUnknown();

  SectionReader br(root, "breaker", errors);
  br.Read("failure_threshold", c.breaker.failure_threshold);
  br.Read("open_duration_ms", c.breaker.open_duration_ms);
  br.Read("half_open_probes", c.breaker.half_open_probes);
  br.RejectUnknown();

  SectionReader cache(root, "cache", errors);
  cache.Read("path", c.cache.path);
  cache.Read("ttl_days", c.cache.ttl_days);
  cache.RejectUnknown();

  SectionReader sanity(root, "sanity", errors);
  sanity.Read("past_days", c.sanity.past_days);
  sanity.Read("future_days", c.sanity.future_days);
  sanity.RejectUnknown();

  SectionReader sig(root, "signal", errors);
  std::string policy(signal::TimeFactorPolicyName(c.signal.time_factor));
  sig.Read("time_factor_policy", policy);
  sig.RejectUnknown();
  if (auto p = signal::TimeFactorPolicyFromName(policy)) {
    c.signal.time_factor = *p;
  } else {
    errors.push_back("signal.time_factor_policy: must be pub_time or content_time");
  }

  SectionReader rr(root, "rerank", errors);
  rr.Read("f_exp", c.rerank.f_exp);
  rr.Read("cross_rel", c.rerank.cross_rel);
  rr.Read("cross_auth", c.rerank.cross_auth);
  rr.Read("recency", c.rerank.recency);
  rr.RejectUnknown();

  SectionReader ev(root, "eval", errors);
  ev.Read("recency_window_days", c.eval.recency_window_days);
  ev.Read("ks", c.eval.ks);
  ev.Read("num_queries", c.eval.num_queries);
  ev.Read("docs_per_query", c.eval.docs_per_query);
  ev.RejectUnknown();

  SectionReader sv(root, "service", errors);
  sv.Read("host", c.service.host);
  sv.Read("port", c.service.port);
  sv.Read("enable_test_hooks", c.service.enable_test_hooks);
  sv.Read("retrieve_limit", c.service.retrieve_limit);
  sv.RejectUnknown();

  if (root.contains("seed")) {
    if (root["seed"].is_number_unsigned()) {
      c.seed = root["seed"].get<std::uint64_t>();
    } else {
      errors.push_back("seed: must be a non-negative integer");
    }
  }

  if (!errors.empty()) Fail("invalid config:", errors);
  c.Validate();
  return c;
}

Config Config::LoadFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot open config: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  Config c = FromJsonText(ss.str());
  const auto base = std::filesystem::path(path).parent_path();
  for (std::string* p : {&c.extraction.stopwords_path, &c.inference.rules_path,
                         &c.inference.exemplars_path, &c.parser.patterns_path, &c.cache.path}) {
    if (!p->empty() && std::filesystem::path(*p).is_relative()) *p = (base / *p).string();
  }
  return c;
}

std::string Config::ToJsonText() const {
  ordered_json j;
  j["extraction"] = {{"alpha", extraction.alpha},
                     {"window", extraction.window},
                     {"tau", extraction.tau},
                     {"decay_half_life_days", extraction.decay_half_life_days},
                     {"stopwords_path", extraction.stopwords_path}};
  j["inference"] = {{"lambda1", inference.lambda1},
                    {"lambda2", inference.lambda2},
                    {"horizon_norm_days", inference.horizon_norm_days},
                    {"samples", inference.samples},
                    {"rules_path", inference.rules_path},
                    {"exemplars_path", inference.exemplars_path}};
  j["parser"] = {{"patterns_path", parser.patterns_path}};
  j["backend"] = {{"kind", backend.kind},
                  {"endpoint", backend.endpoint},
                  {"remote_deadline_ms", backend.remote_deadline_ms},
                  {"oracle_deadline_ms", backend.oracle_deadline_ms},
                  {"max_concurrency", backend.max_concurrency}};
  j["breaker"] = {{"failure_threshold", breaker.failure_threshold},
                  {"open_duration_ms", breaker.open_duration_ms},
                  {"half_open_probes", breaker.half_open_probes}};
  j["cache"] = {{"path", cache.path}, {"ttl_days", cache.ttl_days}};
  j["sanity"] = {{"past_days", sanity.past_days}, {"future_days", sanity.future_days}};
  j["signal"] = {{"time_factor_policy", signal::TimeFactorPolicyName(signal.time_factor)}};
  j["rerank"] = {{"f_exp", rerank.f_exp},
                 {"cross_rel", rerank.cross_rel},
                 {"cross_auth", rerank.cross_auth},
                 {"recency", rerank.recency}};
  j["eval"] = {{"recency_window_days", eval.recency_window_days},
               {"ks", eval.ks},
               {"num_queries", eval.num_queries},
               {"docs_per_query", eval.docs_per_query}};
  j["service"] = {{"host", service.host},
                  {"port", service.port},
                  {"enable_test_hooks", service.enable_test_hooks},
                  {"retrieve_limit", service.retrieve_limit}};
  j["seed"] = seed;
  return j.dump(2) + "\n";
}

void Config::ApplyEnvironment(
    const std::function<std::optional<std::string>(const char*)>& getenv) {
  if (auto v = getenv("HORIZON_BACKEND_ENDPOINT")) backend.endpoint = *v;
  if (auto v = getenv("HORIZON_REMOTE_DEADLINE_MS")) {
    backend.remote_deadline_ms = ParseEnvInt("HORIZON_REMOTE_DEADLINE_MS", *v);
  }
  if (auto v = getenv("HORIZON_ORACLE_DEADLINE_MS")) {
    backend.oracle_deadline_ms = ParseEnvInt("HORIZON_ORACLE_DEADLINE_MS", *v);
  }
  Validate();
}

void Config::ApplyProcessEnvironment() { ApplyEnvironment(ProcessEnv); }

void Config::Validate() const {
  std::vector<std::string> e;
  if (!(extraction.alpha >= 0.0 && extraction.alpha <= 1.0)) e.push_back("extraction.alpha: outside [0, 1]");
  if (extraction.window < 1 || extraction.window % 2 == 0) e.push_back("extraction.window: must be odd and positive");
  if (!(extraction.tau >= 0.0 && extraction.tau <= 1.0)) e.push_back("extraction.tau: outside [0, 1]");
  if (!(extraction.decay_half_life_days > 0.0)) e.push_back("extraction.decay_half_life_days: must be positive");
  if (inference.lambda1 < 0.0 || inference.lambda2 < 0.0) e.push_back("inference.lambda1/lambda2: must be non-negative");
  if (!(inference.horizon_norm_days > 0.0)) e.push_back("inference.horizon_norm_days: must be positive");
  if (inference.samples < 1) e.push_back("inference.samples: must be at least 1");
  if (backend.kind != "oracle" && backend.kind != "http") e.push_back("backend.kind: must be oracle or http");
  if (backend.remote_deadline_ms < 1 || backend.oracle_deadline_ms < 1) e.push_back("backend deadlines: must be positive");
  if (backend.max_concurrency < 1) e.push_back("backend.max_concurrency: must be positive");
  if (breaker.failure_threshold < 1) e.push_back("breaker.failure_threshold: must be positive");
  if (breaker.open_duration_ms < 0) e.push_back("breaker.open_duration_ms: must be non-negative");
  if (breaker.half_open_probes < 1) e.push_back("breaker.half_open_probes: must be positive");
  if (cache.ttl_days < 1) e.push_back("cache.ttl_days: must be positive");
  if (sanity.past_days < 0 || sanity.future_days < 0) e.push_back("sanity bounds: must be non-negative");
  try {
    eval::ValidateWeights(rerank);
  } catch (const Error& err) {
    e.push_back(std::string("rerank: ") + err.what());
  }
  if (eval.recency_window_days < 0) e.push_back("eval.recency_window_days: must be non-negative");
  if (eval.ks.empty()) e.push_back("eval.ks: must not be empty");
  for (int k : eval.ks) {
    if (k < 1) e.push_back("eval.ks: every k must be at least 1");
  }
  if (eval.num_queries < 0) e.push_back("eval.num_queries: must be non-negative");
  if (eval.docs_per_query < 5) e.push_back("eval.docs_per_query: must be at least 5");
  if (service.port < 0 || service.port > 65535) e.push_back("service.port: outside 0-65535");
  if (service.retrieve_limit < 1) e.push_back("service.retrieve_limit: must be positive");
  if (!e.empty()) Fail("invalid config:", e);
}

extraction::ExtractionParams Config::extraction_params() const {
  return {extraction.alpha, extraction.window, extraction.tau, extraction.decay_half_life_days};
}

int Config::backend_deadline_ms() const {
  return backend.kind == "http" ? backend.remote_deadline_ms : backend.oracle_deadline_ms;
}

}  // namespace horizon::service
