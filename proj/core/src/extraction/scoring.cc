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

#include "horizon/extraction/scoring.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <unordered_set>

#include "horizon/common/error.h"

namespace horizon::extraction {

double TermFrequencyCosine::Similarity(std::span<const std::string> text_tokens,
                                       std::span<const std::string> keywords) const {
  if (text_tokens.empty() || keywords.empty()) return 0.0;
  std::map<std::string_view, double> tf;
  for (const auto& t : text_tokens) tf[t] += 1.0;
  std::unordered_set<std::string_view> kw(keywords.begin(), keywords.end());

  double dot = 0.0;
  double text_norm2 = 0.0;
  for (const auto& [term, count] : tf) {
    text_norm2 += count * count;
    if (kw.contains(term)) dot += count;
  }
  if (dot == 0.0) return 0.0;
  double cos = dot / (std::sqrt(text_norm2) * std::sqrt(static_cast<double>(kw.size())));
  return std::clamp(cos, 0.0, 1.0);
}

double DecayRateForHalfLife(double half_life_days) {
  if (!(half_life_days > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "half-life must be positive");
  }
  return std::numbers::ln2 / half_life_days;
}

bool ContainsKeyword(std::span<const std::string> text_tokens,
                     std::span<const std::string> keywords) {
  for (const auto& t : text_tokens) {
    if (std::find(keywords.begin(), keywords.end(), t) != keywords.end()) return true;
  }
  return false;
}

double RelK(const FocusedChunk& chunk, std::span<const std::string> keywords,
            const Tokenizer& tokenizer, const TextSimilarity& similarity) {
  auto tokens = tokenizer.ContentWords(chunk.Text());
  return similarity.Similarity(tokens, keywords);
}

double RelT(const FocusedChunk& chunk, std::span<const temporal::TimePoint> query_times,
            const temporal::TimePoint& reference, double decay_lambda) {
  if (!query_times.empty()) {
    double best = 0.0;
    for (const auto& q : query_times) {
      for (const auto& a : chunk.anchor_times) {
        double match = temporal::HierarchicalMatchDepth(q, a);
        best = std::max(best, match / std::max(q.depth(), a.depth()));
      }
    }
    return best;
  }
  if (!(decay_lambda > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "decay rate must be positive");
  }
  std::optional<double> elapsed;
  for (const auto& a : chunk.anchor_times) {
    double e = temporal::ElapsedDays(a, reference);
    if (!elapsed || e < *elapsed) elapsed = e;
  }
  if (!elapsed && chunk.pub_time) elapsed = temporal::ElapsedDays(*chunk.pub_time, reference);
  if (!elapsed) return 0.0;
  return std::exp(-decay_lambda * *elapsed);
}

double CompositeScore(bool keyword_gate, double rel_k, double rel_t, double alpha) {
  if (!keyword_gate) return 0.0;
  return alpha * rel_k + (1.0 - alpha) * rel_t;
}

double ScoreChunk(FocusedChunk& chunk, const QueryAnchor& anchor, const ScoringParams& params,
                  const temporal::TimePoint& reference, const Tokenizer& tokenizer,
                  const TextSimilarity& similarity) {
  if (!(params.alpha >= 0.0 && params.alpha <= 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "alpha must lie in [0,1]");
  }
  auto tokens = tokenizer.ContentWords(chunk.Text());
  chunk.rel_k = similarity.Similarity(tokens, anchor.keywords);
  chunk.rel_t = RelT(chunk, anchor.temporal_entities, reference, params.decay_lambda);
  bool gate = ContainsKeyword(tokens, anchor.keywords);
  chunk.s_rel = std::clamp(CompositeScore(gate, chunk.rel_k, chunk.rel_t, params.alpha), 0.0, 1.0);
  return chunk.s_rel;
}

FocusedChunkSet SelectFocus(std::vector<FocusedChunk> candidates, double tau) {
  if (!(tau >= 0.0 && tau <= 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "tau must lie in [0,1]");
  }
  FocusedChunkSet out;
  for (auto& c : candidates) {
    if (c.s_rel > tau) out.chunks.push_back(c);
  }
  if (out.chunks.empty()) {
    out.fallback_used = true;
    for (auto& c : candidates) {
      if (c.from_fallback()) out.chunks.push_back(std::move(c));
    }
  }
  std::stable_sort(out.chunks.begin(), out.chunks.end(),
                   [](const FocusedChunk& a, const FocusedChunk& b) { return a.s_rel > b.s_rel; });
  return out;
}

}  // namespace horizon::extraction
