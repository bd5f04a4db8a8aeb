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

#ifndef HORIZON_SERVICE_CONFIG_H_
#define HORIZON_SERVICE_CONFIG_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "horizon/eval/rerank.h"
#include "horizon/extraction/extractor.h"
#include "horizon/signal/signal.h"

namespace horizon::service {

// Every tunable, with its default. Serialized as a JSON object with one
// section per area; see docs/file_formats.md. Empty paths select the
// built-in tables.
struct Config {
  struct Extraction {
    double alpha = 0.6;
    int window = 5;
    double tau = 0.35;
    double decay_half_life_days = 30.0;
    std::string stopwords_path;
  } extraction;

  struct Inference {
    double lambda1 = 0.5;
    double lambda2 = 0.5;
    double horizon_norm_days = 365.0;
    int samples = 3;
    std::string rules_path;
    std::string exemplars_path;
  } inference;

  struct Parser {
    std::string patterns_path;
  } parser;

  struct Backend {
    std::string kind = "oracle";  // oracle | http
    std::string endpoint = "http://127.0.0.1:8090/v1/complete";
    int remote_deadline_ms = 800;
    int oracle_deadline_ms = 50;
    int max_concurrency = 8;
  } backend;

  struct Breaker {
    int failure_threshold = 5;
    int open_duration_ms = 30000;
    int half_open_probes = 1;
  } breaker;

  struct Cache {
    std::string path;  // empty keeps the cache in memory
    int ttl_days = 7;
  } cache;

  signal::SanityBounds sanity;

  struct Signal {
    signal::TimeFactorPolicy time_factor = signal::TimeFactorPolicy::kPubTime;
  } signal;

  eval::RerankWeights rerank;

  struct Eval {
    int recency_window_days = 30;
    std::vector<int> ks = {4, 10};
    int num_queries = 500;
    int docs_per_query = 20;
  } eval;

  struct Service {
    std::string host = "127.0.0.1";
    int port = 8080;
    bool enable_test_hooks = false;
    int retrieve_limit = 50;
  } service;

  std::uint64_t seed = 20250602;

  // Keys absent from `text` keep their defaults; unknown keys and values out
  // of range are rejected with Error(kDataError) listing every problem.
  static Config FromJsonText(std::string_view text);
  // Relative paths inside the file resolve against the file's directory.
  static Config LoadFile(const std::string& path);
  // Every key, defaults included.
  std::string ToJsonText() const;

  // HORIZON_BACKEND_ENDPOINT, HORIZON_REMOTE_DEADLINE_MS and
  // HORIZON_ORACLE_DEADLINE_MS override the matching keys.
  void ApplyEnvironment(const std::function<std::optional<std::string>(const char*)>& getenv);
  void ApplyProcessEnvironment();

  // Throws Error(kDataError) listing every out-of-range value.
  void Validate() const;

  extraction::ExtractionParams extraction_params() const;
  int backend_deadline_ms() const;
};

}  // namespace horizon::service

#endif  // HORIZON_SERVICE_CONFIG_H_
