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

#ifndef HORIZON_EXTRACTION_QUERY_ANCHOR_H_
#define HORIZON_EXTRACTION_QUERY_ANCHOR_H_

#include <string>
#include <string_view>
#include <vector>

#include "horizon/extraction/tokenizer.h"
#include "horizon/temporal/parser.h"
#include "horizon/temporal/time_point.h"

namespace horizon::extraction {

struct QueryAnchor {
  // Content tokens in first-occurrence order, without duplicates.
  std::vector<std::string> keywords;
  // Empty when the query carries no temporal constraint.
  std::vector<temporal::TimePoint> temporal_entities;
  std::string raw_query;
};

// Keywords exclude the text of recognized temporal expressions. A query made
// only of stopwords keeps its raw tokens as keywords. Throws
// Error(kInvalidArgument) for a query with no tokens at all.
QueryAnchor ExtractQueryAnchor(std::string_view query, const temporal::TimePoint& reference,
                               const temporal::TemporalParser& parser,
                               const Tokenizer& tokenizer);

}  // namespace horizon::extraction

#endif  // HORIZON_EXTRACTION_QUERY_ANCHOR_H_
