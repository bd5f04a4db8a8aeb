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

#include "horizon/pipeline/expiry_pipeline.h"

#include <algorithm>
#include <exception>

#include <spdlog/spdlog.h>

#include "horizon/common/error.h"
#include "horizon/inference/engine.h"

namespace horizon::pipeline {
namespace {

struct Sample {
  inference::InferenceOutcome outcome;
  fusion::ExpirationVerdict verdict;
};

}  // namespace

ExpiryPipeline::ExpiryPipeline(std::shared_ptr<const extraction::Extractor> extractor,
                               std::shared_ptr<const inference::ReasoningBackend> backend,
                               std::shared_ptr<const inference::RuleTable> rules,
                               std::shared_ptr<const DocumentStore> store,
                               std::vector<inference::Exemplar> exemplars,
                               PipelineOptions options)
    : extractor_(std::move(extractor)),
      backend_(std::move(backend)),
      rules_(std::move(rules)),
      store_(std::move(store)),
      exemplars_(std::move(exemplars)),
      options_(options) {
  if (!extractor_ || !backend_ || !rules_) {
    throw Error(ErrorCode::kInvalidArgument, "pipeline needs extractor, backend and rules");
  }
  if (options_.samples < 1) throw Error(ErrorCode::kInvalidArgument, "samples must be >= 1");
}

PipelineResult ExpiryPipeline::Run(std::string_view query, const temporal::TimePoint& search_time,
                                   std::span<const extraction::Document* const> docs,
                                   const Deadline& deadline) const {
  PipelineResult result;
  const extraction::QueryAnchor anchor = extractor_->Anchor(query, search_time);
  result.extraction = extractor_->Extract(anchor, docs, search_time);
  const auto& focus = result.extraction.focus;
  if (focus.chunks.empty()) throw Error(ErrorCode::kNoEvidence, "no evidence");

  std::vector<std::string> evidence;
  for (const auto& c : focus.chunks) {
    auto words = extractor_->tokenizer().Words(c.Text());
    evidence.insert(evidence.end(), words.begin(), words.end());
  }
  result.profile = rules_->Profile(anchor.keywords, evidence);
  const std::string domain = rules_->Profile(anchor.keywords, {}).event_class;
  const fusion::AlignmentContext context{rules_.get(), result.profile, search_time};

  const int n = backend_->supports_sampling() ? options_.samples : 1;
  std::vector<Sample> samples;
  std::exception_ptr first_error;
  for (int i = 0; i < n; ++i) {
    try {
      Sample s;
      s.outcome = inference::ForwardBackward(*backend_, anchor, focus, search_time, exemplars_,
                                             domain, deadline, i);
      s.verdict = fusion::Fuse(s.outcome.candidates, focus, s.outcome, &context);
      samples.push_back(std::move(s));
    } catch (const Error& e) {
      if (!first_error) first_error = std::current_exception();
      if (e.code() == ErrorCode::kBackendTimeout) break;
      spdlog::debug("sample {} failed: {}", i, e.what());
    }
  }
  if (samples.empty()) std::rethrow_exception(first_error);
  result.samples_run = n;

  std::size_t keep = 0;
  if (samples.size() > 1) {
    // Consensus: fuse over every candidate any sample proposed.
    std::vector<temporal::TimePoint> pooled;
    for (const auto& s : samples) {
      for (const auto& c : s.outcome.candidates) {
        if (std::find(pooled.begin(), pooled.end(), c) == pooled.end()) pooled.push_back(c);
      }
    }
    const auto consensus = fusion::Fuse(pooled, focus, samples.front().outcome, &context).t_exp;
    double best = 0.0;
    for (std::size_t i = 0; i < samples.size(); ++i) {
      const double score = inference::ScorePrediction(samples[i].verdict.t_exp,
                                                      samples[i].outcome.s_self, consensus,
                                                      options_.objective);
      if (i == 0 || score < best) {
        best = score;
        keep = i;
      }
    }
    result.selection_objective = best;
  }
  result.outcome = std::move(samples[keep].outcome);
  result.verdict = std::move(samples[keep].verdict);
  return result;
}

std::vector<const extraction::Document*> ExpiryPipeline::DocumentsFor(
    const signal::ThresholdRequest& r) const {
  if (!store_) return {};
  if (!r.docids.empty()) return store_->Resolve(r.docids);
  const auto anchor = extractor_->Anchor(r.query, r.search_time);
  return store_->Retrieve(anchor.keywords, options_.retrieve_limit);
}

signal::ComputedThreshold ExpiryPipeline::Compute(const signal::ThresholdRequest& request,
                                                  const Deadline& deadline) {
  const auto docs = DocumentsFor(request);
  const PipelineResult r = Run(request.query, request.search_time, docs, deadline);
  return {r.verdict.t_exp, r.verdict.s_self};
}

std::optional<temporal::TimePoint> ExpiryPipeline::LatestEvent(
    const extraction::Document& doc) const {
  extraction::FocusedChunkSet set;
  set.chunks = extractor_->Candidates(doc);
  if (set.chunks.empty()) return std::nullopt;

  extraction::QueryAnchor anchor;
  anchor.raw_query = doc.title;
  anchor.keywords = extractor_->tokenizer().ContentWords(doc.title);
  const auto prompt = inference::BuildPrompt(anchor, set, doc.pub_time, {}, "general",
                                             inference::PromptMode::kForward);
  const Deadline deadline(SystemClock::Get(), options_.content_time_deadline);
  const auto response = backend_->Complete(prompt, 0, deadline);
  std::optional<temporal::TimePoint> latest;
  for (const auto& s : response.trajectory.steps) {
    if (s.kind != inference::StepKind::kEvidence || !s.time) continue;
    if (!latest || temporal::DaysBetween(*latest, *s.time) > 0) latest = s.time;
  }
  return latest;
}

}  // namespace horizon::pipeline
