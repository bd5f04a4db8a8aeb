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

#ifndef HORIZON_EVAL_CORPUS_H_
#define HORIZON_EVAL_CORPUS_H_

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "horizon/extraction/document.h"
#include "horizon/temporal/time_point.h"

namespace horizon::eval {

// Freshness demand of a query: "week" wants content no older than a week,
// "month" no older than a month, "none" has no recency demand.
enum class FreshnessTier { kNone, kMonth, kWeek };

std::string_view TierName(FreshnessTier t);
std::optional<FreshnessTier> TierFromName(std::string_view name);

struct CandidateJudgment {
  std::string docid;
  int grade = 0;  // base relevance, 0-4
  int label = 0;  // freshness satisfaction, 0-2

  bool operator==(const CandidateJudgment&) const = default;
};

struct EvalQuery {
  std::string qid;
  std::string text;
  temporal::TimePoint search_time = temporal::TimePoint::Year(1970);
  FreshnessTier tier = FreshnessTier::kNone;
  std::optional<temporal::TimePoint> gt_expiry;
  std::vector<CandidateJudgment> candidates;

  bool operator==(const EvalQuery&) const = default;
};

// One JSON object per line:
//   {"qid": "q0001", "text": "...", "search_time": "2025-06-02",
//    "tier": "week", "gt_expiry": "2025-06-01" | null,
//    "candidates": [{"docid": "d1", "grade": 3, "label": 2}]}
// All malformed lines are reported together in one Error(kDataError).
std::vector<EvalQuery> ReadQueries(std::istream& in);
std::vector<EvalQuery> LoadQueries(const std::string& path);
std::string QueryToJsonLine(const EvalQuery& q);
void WriteQueries(std::ostream& out, const std::vector<EvalQuery>& queries);

struct Corpus {
  std::vector<EvalQuery> queries;
  std::vector<extraction::Document> documents;
};

inline constexpr std::string_view kDocumentsFile = "documents.jsonl";
inline constexpr std::string_view kQueriesFile = "queries.jsonl";

// Reads <dir>/documents.jsonl and <dir>/queries.jsonl and checks that every
// candidate names a known document.
Corpus LoadCorpus(const std::string& dir);
void WriteCorpus(const std::string& dir, const Corpus& corpus);

}  // namespace horizon::eval

#endif  // HORIZON_EVAL_CORPUS_H_
