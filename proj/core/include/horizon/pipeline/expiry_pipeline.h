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

#ifndef HORIZON_PIPELINE_EXPIRY_PIPELINE_H_
#define HORIZON_PIPELINE_EXPIRY_PIPELINE_H_

#include <memory>
#include <span>
#include <string_view>
#include <vector>

#include "horizon/common/clock.h"
#include "horizon/extraction/extractor.h"
#include "horizon/fusion/fusion.h"
#include "horizon/inference/backend.h"
#include "horizon/inference/objective.h"
#include "horizon/inference/prompt.h"
#include "horizon/inference/rule_table.h"
#include "horizon/pipeline/document_store.h"
#include "horizon/signal/signal.h"
#include "horizon/signal/threshold_service.h"

namespace horizon::pipeline {

struct PipelineOptions {
  inference::ObjectiveWeights objective;
  // Forward-backward runs per query when the backend samples.
  int samples = 3;
  // Documents retrieved when a request names none.
  std::size_t retrieve_limit = 50;
  // Budget for a single-document content-time estimate.
  Millis content_time_deadline{50};
};

struct PipelineResult {
  extraction::ExtractionResult extraction;
  inference::EventProfile profile;
  inference::InferenceOutcome outcome;
  fusion::ExpirationVerdict verdict;
  // Objective of the kept sample against the fused consensus; 0 with one
  // sample.
  double selection_objective = 0.0;
  int samples_run = 1;
};

// Extraction, forward-backward inference and authority-weighted fusion for
// one query. Stateless between calls; safe for concurrent use.
class ExpiryPipeline final : public signal::ThresholdSource,
                             public signal::ContentTimeEstimator {
 public:
  ExpiryPipeline(std::shared_ptr<const extraction::Extractor> extractor,
                 std::shared_ptr<const inference::ReasoningBackend> backend,
                 std::shared_ptr<const inference::RuleTable> rules,
                 std::shared_ptr<const DocumentStore> store,
                 std::vector<inference::Exemplar> exemplars, PipelineOptions options);

  // Throws Error(kNoEvidence) when nothing passes extraction, plus whatever
  // inference and fusion throw.
  PipelineResult Run(std::string_view query, const temporal::TimePoint& search_time,
                     std::span<const extraction::Document* const> docs,
                     const Deadline& deadline) const;

  // Documents named by the request, or retrieved from the store.
  std::vector<const extraction::Document*> DocumentsFor(const signal::ThresholdRequest& r) const;

  signal::ComputedThreshold Compute(const signal::ThresholdRequest& request,
                                    const Deadline& deadline) override;

  // Latest event start the backend reads from the document alone, searched
  // as of its publication date.
  std::optional<temporal::TimePoint> LatestEvent(const extraction::Document& doc) const override;

  const extraction::Extractor& extractor() const { return *extractor_; }
  const inference::ReasoningBackend& backend() const { return *backend_; }
  const inference::RuleTable& rules() const { return *rules_; }
  const PipelineOptions& options() const { return options_; }

 private:
  std::shared_ptr<const extraction::Extractor> extractor_;
  std::shared_ptr<const inference::ReasoningBackend> backend_;
  std::shared_ptr<const inference::RuleTable> rules_;
  std::shared_ptr<const DocumentStore> store_;
  std::vector<inference::Exemplar> exemplars_;
  PipelineOptions options_;
};

}  // namespace horizon::pipeline

#endif  // HORIZON_PIPELINE_EXPIRY_PIPELINE_H_
