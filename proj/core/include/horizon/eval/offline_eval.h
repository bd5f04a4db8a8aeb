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

#ifndef HORIZON_EVAL_OFFLINE_EVAL_H_
#define HORIZON_EVAL_OFFLINE_EVAL_H_

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "horizon/eval/corpus.h"
#include "horizon/eval/metrics.h"
#include "horizon/eval/rerank.h"
#include "horizon/extraction/extractor.h"
#include "horizon/signal/signal.h"
#include "horizon/signal/threshold_service.h"

namespace horizon::eval {

struct EvalOptions {
  std::vector<int> ks = {4, 10};
  RerankWeights weights;
  // The baseline flags a document fresh iff it is at most this many days old.
  int recency_window_days = 30;
  signal::TimeFactorPolicy time_factor = signal::TimeFactorPolicy::kPubTime;
  // Keep the three ranked docid lists per query in the report.
  bool include_rankings = false;
};

struct SystemQueryResult {
  std::map<int, DayAway> day_away;  // by k; absent for empty rankings
  PairCounts pairs;
  std::vector<std::string> ranking;
};

struct QueryDiagnostics {
  std::string qid;
  FreshnessTier tier = FreshnessTier::kNone;
  std::optional<temporal::TimePoint> gt_expiry;
  std::optional<temporal::TimePoint> t_exp;
  signal::Provenance provenance = signal::Provenance::kFallback;
  std::string fallback_reason;
  int fresh_flags = 0;
  SystemQueryResult baseline;
  SystemQueryResult expiry;
};

struct DayAwaySummary {
  // Per-query top-k median and mean ages, each averaged over queries.
  double median = 0.0;
  double mean = 0.0;
  // Median over queries of the per-query medians; informational, since it
  // jumps between tier clusters on mixed corpora.
  double cross_query_median = 0.0;
  std::size_t queries = 0;
};

struct SystemSummary {
  std::map<int, DayAwaySummary> day_away;
  // Pairs pooled over queries of one tier; "all" pools every query.
  std::map<std::string, PairCounts> pairs;
};

struct EvalReport {
  std::size_t num_queries = 0;
  std::vector<int> ks;
  SystemSummary baseline;
  SystemSummary expiry;
  std::vector<QueryDiagnostics> queries;
  bool include_rankings = false;

  // Deterministic: same inputs, same bytes.
  std::string ToJson() const;
  std::string ToTable() const;
};

// Runs the recency-window baseline and the expiry-aware system over the same
// queries and candidate lists. Thresholds come from `service` once per query.
// With `extractor`, per-document relevance feeds the cross features;
// otherwise it is 0. Throws Error(kDataError) for candidates missing from
// the corpus.
EvalReport RunOfflineEval(const Corpus& corpus, signal::ThresholdService& service,
                          const EvalOptions& options,
                          const extraction::Extractor* extractor = nullptr,
                          const signal::ContentTimeEstimator* estimator = nullptr);

}  // namespace horizon::eval

#endif  // HORIZON_EVAL_OFFLINE_EVAL_H_
