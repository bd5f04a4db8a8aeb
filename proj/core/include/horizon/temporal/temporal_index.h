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

#ifndef HORIZON_TEMPORAL_TEMPORAL_INDEX_H_
#define HORIZON_TEMPORAL_TEMPORAL_INDEX_H_

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "horizon/temporal/parser.h"
#include "horizon/temporal/time_point.h"

namespace horizon::temporal {

// Maps each normalized time point to the sentences that mention it. A point
// mentioned twice in one sentence is listed twice.
class DocumentTemporalIndex {
 public:
  DocumentTemporalIndex() = default;
  explicit DocumentTemporalIndex(std::span<const TemporalMention> mentions);

  bool empty() const { return entries_.empty(); }
  std::size_t size() const { return entries_.size(); }
  const std::map<TimePoint, std::vector<std::size_t>>& entries() const { return entries_; }

  // Sorted, de-duplicated indices of sentences carrying any mention.
  std::vector<std::size_t> AnchorSentences() const;

  // Distinct time points mentioned in sentences [first, last], in order.
  std::vector<TimePoint> TimesInSpan(std::size_t first, std::size_t last) const;

 private:
  std::map<TimePoint, std::vector<std::size_t>> entries_;
};

DocumentTemporalIndex BuildTemporalIndex(const TemporalParser& parser,
                                         std::span<const std::string> sentences,
                                         const TimePoint& reference);

}  // namespace horizon::temporal

#endif  // HORIZON_TEMPORAL_TEMPORAL_INDEX_H_
