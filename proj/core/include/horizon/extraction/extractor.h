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

#ifndef HORIZON_EXTRACTION_EXTRACTOR_H_
#define HORIZON_EXTRACTION_EXTRACTOR_H_

#include <map>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "horizon/extraction/chunking.h"
#include "horizon/extraction/document.h"
#include "horizon/extraction/query_anchor.h"
#include "horizon/extraction/scoring.h"
#include "horizon/extraction/tokenizer.h"
#include "horizon/temporal/parser.h"

namespace horizon::extraction {

struct ExtractionParams {
  double alpha = 0.6;
  int window = 5;
  double tau = 0.35;
  double decay_half_life_days = 30.0;

  ScoringParams scoring() const { return {alpha, DecayRateForHalfLife(decay_half_life_days)}; }
};

struct ExtractionResult {
  QueryAnchor anchor;
  FocusedChunkSet focus;
  // Every scored candidate, pooled over documents in input order.
  std::vector<FocusedChunk> candidates;
  // Best candidate s_rel per document.
  std::map<std::string, double> doc_scores;
};

// Query anchoring plus time-anchored context refinement over a pooled set of
// candidate documents. Relative expressions inside a document resolve
// against its publication date; recency is measured from the search time.
class Extractor {
 public:
  Extractor(std::shared_ptr<const temporal::TemporalParser> parser,
            std::shared_ptr<const Tokenizer> tokenizer,
            std::shared_ptr<const TextSimilarity> similarity, ExtractionParams params);

  QueryAnchor Anchor(std::string_view query, const temporal::TimePoint& search_time) const;

  ExtractionResult Extract(const QueryAnchor& anchor, std::span<const Document* const> docs,
                           const temporal::TimePoint& search_time) const;

  // Candidate chunks of one document, unscored.
  std::vector<FocusedChunk> Candidates(const Document& doc) const;

  const ExtractionParams& params() const { return params_; }
  const temporal::TemporalParser& parser() const { return *parser_; }
  const Tokenizer& tokenizer() const { return *tokenizer_; }

 private:
  std::shared_ptr<const temporal::TemporalParser> parser_;
  std::shared_ptr<const Tokenizer> tokenizer_;
  std::shared_ptr<const TextSimilarity> similarity_;
  ExtractionParams params_;
};

}  // namespace horizon::extraction

#endif  // HORIZON_EXTRACTION_EXTRACTOR_H_
