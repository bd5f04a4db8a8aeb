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

#ifndef HORIZON_EXTRACTION_CHUNKING_H_
#define HORIZON_EXTRACTION_CHUNKING_H_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "horizon/extraction/document.h"
#include "horizon/temporal/parser.h"
#include "horizon/temporal/temporal_index.h"

namespace horizon::extraction {

enum class ChunkOrigin {
  kWindow,  // centered on a temporal anchor sentence
  kTitle,   // fallback: document title
  kLead,    // fallback: leading body sentences
};

// A contiguous run of sentences from one document plus its scores.
struct FocusedChunk {
  std::vector<std::string> sentences;
  // Inclusive body sentence indices. Title chunks use (0, 0).
  std::size_t start = 0;
  std::size_t end = 0;
  // Mentions whose sentence lies inside the span; indices are document-wide.
  std::vector<temporal::TemporalMention> mentions;
  // Distinct normalized times of `mentions`, in chronological order.
  std::vector<temporal::TimePoint> anchor_times;
  double rel_k = 0.0;
  double rel_t = 0.0;
  double s_rel = 0.0;
  double authority = 0.0;
  std::string source_id;
  std::optional<temporal::TimePoint> pub_time;
  ChunkOrigin origin = ChunkOrigin::kWindow;

  std::string Text() const;
  bool from_fallback() const { return origin != ChunkOrigin::kWindow; }
};

// One window of `window` sentences centered on every anchor sentence,
// truncated at document boundaries; identical spans are merged. `mentions`
// are the document's parsed mentions. Empty index gives an empty list.
// Throws Error(kInvalidArgument) unless `window` is odd and positive.
std::vector<FocusedChunk> WindowChunks(const Document& doc,
                                       const temporal::DocumentTemporalIndex& index,
                                       const std::vector<temporal::TemporalMention>& mentions,
                                       int window);

// Title (when present) plus the first `window` body sentences.
std::vector<FocusedChunk> FallbackChunks(const Document& doc, int window);

}  // namespace horizon::extraction

#endif  // HORIZON_EXTRACTION_CHUNKING_H_
