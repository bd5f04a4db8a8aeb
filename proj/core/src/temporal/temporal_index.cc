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

#include "horizon/temporal/temporal_index.h"

#include <algorithm>

namespace horizon::temporal {

DocumentTemporalIndex::DocumentTemporalIndex(std::span<const TemporalMention> mentions) {
  for (const auto& m : mentions) entries_[m.normalized].push_back(m.sentence_index);
  for (auto& [_, indices] : entries_) std::sort(indices.begin(), indices.end());
}

std::vector<std::size_t> DocumentTemporalIndex::AnchorSentences() const {
  std::vector<std::size_t> out;
  for (const auto& [_, indices] : entries_) out.insert(out.end(), indices.begin(), indices.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<TimePoint> DocumentTemporalIndex::TimesInSpan(std::size_t first,
                                                          std::size_t last) const {
  std::vector<TimePoint> out;
  for (const auto& [t, indices] : entries_) {
    if (std::any_of(indices.begin(), indices.end(),
                    [&](std::size_t i) { return i >= first && i <= last; })) {
      out.push_back(t);
    }
  }
  return out;
}

DocumentTemporalIndex BuildTemporalIndex(const TemporalParser& parser,
                                         std::span<const std::string> sentences,
                                         const TimePoint& reference) {
  auto mentions = parser.Parse(sentences, reference);
  return DocumentTemporalIndex(mentions);
}

}  // namespace horizon::temporal
