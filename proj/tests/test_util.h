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

#ifndef HORIZON_TESTS_TEST_UTIL_H_
#define HORIZON_TESTS_TEST_UTIL_H_

#include <memory>
#include <string>
#include <vector>

#include "horizon/extraction/document.h"
#include "horizon/extraction/extractor.h"
#include "horizon/temporal/time_point.h"

namespace horizon::testing {

inline temporal::TimePoint Day(const char* text) {
  auto t = temporal::TimePoint::Parse(text);
  if (!t) throw std::invalid_argument(text);
  return *t;
}

inline extraction::Document MakeDoc(std::string docid, std::string title,
                                    std::vector<std::string> sentences, const char* pub,
                                    double authority = 0.8, std::string source = "news") {
  extraction::Document d;
  d.docid = std::move(docid);
  d.title = std::move(title);
  d.sentences = std::move(sentences);
  d.pub_time = Day(pub);
  d.authority = authority;
  d.source = std::move(source);
  return d;
}

inline std::shared_ptr<const extraction::Extractor> DefaultExtractor(
    extraction::ExtractionParams params = {}) {
  return std::make_shared<extraction::Extractor>(
      std::make_shared<temporal::TemporalParser>(), std::make_shared<extraction::Tokenizer>(),
      std::make_shared<extraction::TermFrequencyCosine>(), params);
}

inline std::string FixturePath(const std::string& name) {
  return std::string(HORIZON_FIXTURE_DIR) + "/" + name;
}

inline std::string ConfigPath(const std::string& name) {
  return std::string(HORIZON_CONFIG_DIR) + "/" + name;
}

}  // namespace horizon::testing

#endif  // HORIZON_TESTS_TEST_UTIL_H_
