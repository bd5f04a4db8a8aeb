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

#include "horizon/service/runtime.h"

#include "horizon/inference/oracle_backend.h"
#include "horizon/inference/remote_backend.h"

namespace horizon::service {

std::unique_ptr<Runtime> Runtime::Build(const Config& config,
                                        std::vector<extraction::Document> documents,
                                        const Clock& clock) {
  config.Validate();
  std::shared_ptr<const inference::ReasoningBackend> backend;
  if (config.backend.kind == "http") {
    inference::RemoteBackendOptions options;
    options.endpoint = config.backend.endpoint;
    options.max_concurrency = config.backend.max_concurrency;
    backend = std::make_shared<inference::RemoteBackend>(options);
  }
  return Build(config, std::move(documents), std::move(backend), clock);
}

std::unique_ptr<Runtime> Runtime::Build(const Config& config,
                                        std::vector<extraction::Document> documents,
                                        std::shared_ptr<const inference::ReasoningBackend> backend,
                                        const Clock& clock) {
  config.Validate();
  auto rt = std::make_unique<Runtime>();
  rt->config = config;

  rt->parser = std::make_shared<temporal::TemporalParser>(
      config.parser.patterns_path.empty() ? temporal::ParserConfig::Default()
                                          : temporal::ParserConfig::LoadFile(config.parser.patterns_path));
  rt->tokenizer = config.extraction.stopwords_path.empty()
                      ? std::make_shared<extraction::Tokenizer>()
                      : std::make_shared<extraction::Tokenizer>(
                            extraction::Tokenizer::FromStopwordFile(config.extraction.stopwords_path));
  rt->extractor = std::make_shared<extraction::Extractor>(
      rt->parser, rt->tokenizer, std::make_shared<extraction::TermFrequencyCosine>(),
      config.extraction_params());
  rt->rules = std::make_shared<inference::RuleTable>(
      config.inference.rules_path.empty() ? inference::RuleTable::Default()
                                          : inference::RuleTable::LoadFile(config.inference.rules_path));
  rt->backend = backend ? std::move(backend)
                        : std::make_shared<inference::OracleBackend>(rt->rules, rt->tokenizer);
  rt->store = std::make_shared<pipeline::DocumentStore>(std::move(documents), *rt->tokenizer);

  std::vector<inference::Exemplar> exemplars;
  if (!config.inference.exemplars_path.empty()) {
    exemplars = inference::LoadExemplars(config.inference.exemplars_path);
  }
  pipeline::PipelineOptions popts;
  popts.objective = {config.inference.lambda1, config.inference.lambda2,
                     config.inference.horizon_norm_days};
  popts.samples = config.inference.samples;
  popts.retrieve_limit = static_cast<std::size_t>(config.service.retrieve_limit);
  popts.content_time_deadline = Millis(config.backend_deadline_ms());
  rt->pipeline = std::make_shared<pipeline::ExpiryPipeline>(rt->extractor, rt->backend, rt->rules,
                                                            rt->store, std::move(exemplars), popts);

  rt->cache = std::make_shared<signal::ThresholdCache>(clock, config.cache.ttl_days, config.cache.path);
  rt->breaker = std::make_shared<signal::CircuitBreaker>(
      clock, signal::BreakerConfig{config.breaker.failure_threshold,
                                   Millis(config.breaker.open_duration_ms),
                                   config.breaker.half_open_probes});
  signal::ThresholdServiceOptions sopts;
  sopts.deadline = Millis(config.backend_deadline_ms());
  sopts.sanity = config.sanity;
  rt->service = std::make_unique<signal::ThresholdService>(rt->pipeline, rt->cache, rt->breaker,
                                                           clock, sopts);
  return rt;
}

}  // namespace horizon::service
