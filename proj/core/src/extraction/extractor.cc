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

#include "horizon/extraction/extractor.h"

#include <algorithm>

#include "horizon/temporal/temporal_index.h"

namespace horizon::extraction {

Extractor::Extractor(std::shared_ptr<const temporal::TemporalParser> parser,
                     std::shared_ptr<const Tokenizer> tokenizer,
                     std::shared_ptr<const TextSimilarity> similarity, ExtractionParams params)
    : parser_(std::move(parser)),
      tokenizer_(std::move(tokenizer)),
      similarity_(std::move(similarity)),
      params_(params) {}

QueryAnchor Extractor::Anchor(std::string_view query,
                              const temporal::TimePoint& search_time) const {
  return ExtractQueryAnchor(query, search_time, *parser_, *tokenizer_);
}

std::vector<FocusedChunk> Extractor::Candidates(const Document& doc) const {
  auto mentions = parser_->Parse(doc.sentences, doc.pub_time);
  temporal::DocumentTemporalIndex index(mentions);
  if (index.empty()) return FallbackChunks(doc, params_.window);
  return WindowChunks(doc, index, mentions, params_.window);
}

ExtractionResult Extractor::Extract(const QueryAnchor& anchor,
                                    std::span<const Document* const> docs,
                                    const temporal::TimePoint& search_time) const {
  ExtractionResult result;
  result.anchor = anchor;
  const ScoringParams scoring = params_.scoring();
  for (const Document* doc : docs) {
    double best = 0.0;
    for (auto& chunk : Candidates(*doc)) {
      best = std::max(best, ScoreChunk(chunk, anchor, scoring, search_time, *tokenizer_, *similarity_));
      result.candidates.push_back(std::move(chunk));
    }
    result.doc_scores[doc->docid] = best;
  }
  result.focus = SelectFocus(result.candidates, params_.tau);
  return result;
}

}  // namespace horizon::extraction
