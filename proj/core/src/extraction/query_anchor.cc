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

#include "horizon/extraction/query_anchor.h"

#include <algorithm>

#include "horizon/common/error.h"

namespace horizon::extraction {
namespace {

void AppendUnique(std::vector<std::string>& out, std::vector<std::string> words) {
  for (auto& w : words) {
    if (std::find(out.begin(), out.end(), w) == out.end()) out.push_back(std::move(w));
  }
}

}  // namespace

QueryAnchor ExtractQueryAnchor(std::string_view query, const temporal::TimePoint& reference,
                               const temporal::TemporalParser& parser,
                               const Tokenizer& tokenizer) {
  if (tokenizer.Words(query).empty()) {
    throw Error(ErrorCode::kInvalidArgument, "query has no tokens");
  }
  QueryAnchor anchor;
  anchor.raw_query = std::string(query);

  auto mentions = parser.ParseSentence(query, 0, reference);
  std::string rest(query);
  // Blank out temporal surfaces back to front so offsets stay valid.
  for (auto it = mentions.rbegin(); it != mentions.rend(); ++it) {
    rest.replace(it->offset, it->surface.size(), std::string(it->surface.size(), ' '));
  }
  for (const auto& m : mentions) {
    if (std::find(anchor.temporal_entities.begin(), anchor.temporal_entities.end(),
                  m.normalized) == anchor.temporal_entities.end()) {
      anchor.temporal_entities.push_back(m.normalized);
    }
  }

  AppendUnique(anchor.keywords, tokenizer.ContentWords(rest));
  if (anchor.keywords.empty()) AppendUnique(anchor.keywords, tokenizer.ContentWords(query));
  if (anchor.keywords.empty()) AppendUnique(anchor.keywords, tokenizer.Words(query));
  return anchor;
}

}  // namespace horizon::extraction
