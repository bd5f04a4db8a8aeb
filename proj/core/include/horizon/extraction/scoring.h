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

#ifndef HORIZON_EXTRACTION_SCORING_H_
#define HORIZON_EXTRACTION_SCORING_H_

#include <span>
#include <string>
#include <vector>

#include "horizon/extraction/chunking.h"
#include "horizon/extraction/query_anchor.h"
#include "horizon/extraction/tokenizer.h"

namespace horizon::extraction {

// Semantic similarity between chunk tokens and query keywords, in [0, 1].
class TextSimilarity {
 public:
  virtual ~TextSimilarity() = default;
  virtual double Similarity(std::span<const std::string> text_tokens,
                            std::span<const std::string> keywords) const = 0;
};

// Cosine between the chunk's term-frequency vector and the keyword set
// (each keyword weighted 1).
class TermFrequencyCosine final : public TextSimilarity {
 public:
  double Similarity(std::span<const std::string> text_tokens,
                    std::span<const std::string> keywords) const override;
};

// Decay rate giving exp(-rate * half_life) = 1/2.
double DecayRateForHalfLife(double half_life_days);

struct ScoringParams {
  double alpha = 0.6;
  double decay_lambda = DecayRateForHalfLife(30.0);
};

bool ContainsKeyword(std::span<const std::string> text_tokens,
                     std::span<const std::string> keywords);

double RelK(const FocusedChunk& chunk, std::span<const std::string> keywords,
            const Tokenizer& tokenizer, const TextSimilarity& similarity);

// With query times: best hierarchical agreement matched/max(depths) over
// (query time, chunk anchor) pairs, 0 without anchors. Without query times:
// exp(-lambda * elapsed days) of the most recent anchor, or of the
// publication time when the chunk has no anchor.
double RelT(const FocusedChunk& chunk, std::span<const temporal::TimePoint> query_times,
            const temporal::TimePoint& reference, double decay_lambda);

// gate * (alpha * rel_k + (1 - alpha) * rel_t)
double CompositeScore(bool keyword_gate, double rel_k, double rel_t, double alpha);

// Fills rel_k, rel_t and s_rel on `chunk` and returns s_rel.
double ScoreChunk(FocusedChunk& chunk, const QueryAnchor& anchor, const ScoringParams& params,
                  const temporal::TimePoint& reference, const Tokenizer& tokenizer,
                  const TextSimilarity& similarity);

struct FocusedChunkSet {
  // Sorted by s_rel descending; ties keep input order.
  std::vector<FocusedChunk> chunks;
  bool fallback_used = false;
};

// Keeps chunks with s_rel > tau. When nothing survives, keeps every
// fallback-origin candidate and sets fallback_used.
FocusedChunkSet SelectFocus(std::vector<FocusedChunk> candidates, double tau);

}  // namespace horizon::extraction

#endif  // HORIZON_EXTRACTION_SCORING_H_
