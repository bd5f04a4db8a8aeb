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

#ifndef HORIZON_SERVICE_RUNTIME_H_
#define HORIZON_SERVICE_RUNTIME_H_

#include <memory>
#include <vector>

#include "horizon/common/clock.h"
#include "horizon/extraction/document.h"
#include "horizon/extraction/extractor.h"
#include "horizon/inference/backend.h"
#include "horizon/inference/rule_table.h"
#include "horizon/pipeline/document_store.h"
#include "horizon/pipeline/expiry_pipeline.h"
#include "horizon/service/config.h"
#include "horizon/signal/threshold_service.h"

namespace horizon::service {

// Every long-lived component wired from one Config. The clock must outlive
// the runtime.
struct Runtime {
  Config config;
  std::shared_ptr<const temporal::TemporalParser> parser;
  std::shared_ptr<const extraction::Tokenizer> tokenizer;
  std::shared_ptr<const extraction::Extractor> extractor;
  std::shared_ptr<const inference::RuleTable> rules;
  std::shared_ptr<const inference::ReasoningBackend> backend;
  std::shared_ptr<const pipeline::DocumentStore> store;
  std::shared_ptr<pipeline::ExpiryPipeline> pipeline;
  std::shared_ptr<signal::ThresholdCache> cache;
  std::shared_ptr<signal::CircuitBreaker> breaker;
  std::unique_ptr<signal::ThresholdService> service;

  // Throws Error(kDataError / kIo) for unreadable configuration files.
  static std::unique_ptr<Runtime> Build(const Config& config,
                                        std::vector<extraction::Document> documents,
                                        const Clock& clock = SystemClock::Get());

  // Same wiring around a caller-supplied backend.
  static std::unique_ptr<Runtime> Build(const Config& config,
                                        std::vector<extraction::Document> documents,
                                        std::shared_ptr<const inference::ReasoningBackend> backend,
                                        const Clock& clock = SystemClock::Get());
};

}  // namespace horizon::service

#endif  // HORIZON_SERVICE_RUNTIME_H_
