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

#include "horizon/extraction/chunking.h"

#include <algorithm>

#include "horizon/common/error.h"

namespace horizon::extraction {
namespace {

FocusedChunk MakeChunk(const Document& doc, std::size_t start, std::size_t end, ChunkOrigin origin) {
  FocusedChunk c;
  c.start = start;
  c.end = end;
  c.origin = origin;
  c.authority = doc.authority;
  c.source_id = doc.docid;
  c.pub_time = doc.pub_time;
  return c;
}

}  // namespace

std::string FocusedChunk::Text() const {
  std::string out;
  for (const auto& s : sentences) {
    if (!out.empty()) out.push_back(' ');
    out += s;
  }
  return out;
}

std::vector<FocusedChunk> WindowChunks(const Document& doc,
                                       const temporal::DocumentTemporalIndex& index,
                                       const std::vector<temporal::TemporalMention>& mentions,
                                       int window) {
  if (window < 1 || window % 2 == 0) {
    throw Error(ErrorCode::kInvalidArgument, "window size must be odd and positive");
  }
  std::vector<FocusedChunk> out;
  if (index.empty() || doc.sentences.empty()) return out;

  const std::size_t half = static_cast<std::size_t>(window / 2);
  const std::size_t last_sentence = doc.sentences.size() - 1;
  for (std::size_t anchor : index.AnchorSentences()) {
    if (anchor > last_sentence) continue;
    std::size_t start = anchor >= half ? anchor - half : 0;
    std::size_t end = std::min(anchor + half, last_sentence);
    bool duplicate = std::any_of(out.begin(), out.end(), [&](const FocusedChunk& c) {
      return c.start == start && c.end == end;
    });
    if (duplicate) continue;

    FocusedChunk c = MakeChunk(doc, start, end, ChunkOrigin::kWindow);
    c.sentences.assign(doc.sentences.begin() + static_cast<std::ptrdiff_t>(start),
                       doc.sentences.begin() + static_cast<std::ptrdiff_t>(end) + 1);
    for (const auto& m : mentions) {
      if (m.sentence_index >= start && m.sentence_index <= end) c.mentions.push_back(m);
    }
    c.anchor_times = index.TimesInSpan(start, end);
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<FocusedChunk> FallbackChunks(const Document& doc, int window) {
  std::vector<FocusedChunk> out;
  if (!doc.title.empty()) {
    FocusedChunk title = MakeChunk(doc, 0, 0, ChunkOrigin::kTitle);
    title.sentences.push_back(doc.title);
    out.push_back(std::move(title));
  }
  if (!doc.sentences.empty() && window > 0) {
    std::size_t n = std::min(doc.sentences.size(), static_cast<std::size_t>(window));
    FocusedChunk lead = MakeChunk(doc, 0, n - 1, ChunkOrigin::kLead);
    lead.sentences.assign(doc.sentences.begin(), doc.sentences.begin() + static_cast<std::ptrdiff_t>(n));
    out.push_back(std::move(lead));
  }
  return out;
}

}  // namespace horizon::extraction
