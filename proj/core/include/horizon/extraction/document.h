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

#ifndef HORIZON_EXTRACTION_DOCUMENT_H_
#define HORIZON_EXTRACTION_DOCUMENT_H_

#include <iosfwd>
#include <string>
#include <vector>

#include "horizon/temporal/time_point.h"

namespace horizon::extraction {

// A candidate document. Sentence segmentation happens upstream.
struct Document {
  std::string docid;
  std::string title;
  std::vector<std::string> sentences;
  temporal::TimePoint pub_time = temporal::TimePoint::Year(1970);
  double authority = 0.0;  // [0, 1]
  std::string source;
};

// One JSON object per line:
//   {"docid": "...", "title": "...", "sentences": ["..."],
//    "pub_time": "2025-05-30", "authority": 0.8, "source": "news"}
// Every malformed line is reported; any error aborts the load with
// Error(kDataError) listing them all.
std::vector<Document> ReadDocuments(std::istream& in);
std::vector<Document> LoadDocuments(const std::string& path);

std::string DocumentToJsonLine(const Document& doc);
void WriteDocuments(std::ostream& out, const std::vector<Document>& docs);

}  // namespace horizon::extraction

#endif  // HORIZON_EXTRACTION_DOCUMENT_H_
