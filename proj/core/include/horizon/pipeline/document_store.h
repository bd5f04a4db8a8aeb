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

#ifndef HORIZON_PIPELINE_DOCUMENT_STORE_H_
#define HORIZON_PIPELINE_DOCUMENT_STORE_H_

#include <span>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "horizon/extraction/document.h"
#include "horizon/extraction/tokenizer.h"

namespace horizon::pipeline {

// Immutable in-memory document collection with naive keyword retrieval.
class DocumentStore {
 public:
  DocumentStore(std::vector<extraction::Document> docs, const extraction::Tokenizer& tokenizer);

  const extraction::Document* Find(std::string_view docid) const;

  // Documents sharing at least one keyword with the query, most distinct
  // keyword hits first, then in load order.
  std::vector<const extraction::Document*> Retrieve(std::span<const std::string> keywords,
                                                    std::size_t limit) const;

  // Resolves ids, skipping unknown ones.
  std::vector<const extraction::Document*> Resolve(std::span<const std::string> docids) const;

  const std::vector<extraction::Document>& documents() const { return docs_; }
  std::size_t size() const { return docs_.size(); }

 private:
  std::vector<extraction::Document> docs_;
  std::vector<std::unordered_set<std::string>> vocab_;
  std::unordered_map<std::string, std::size_t> by_id_;
};

}  // namespace horizon::pipeline

#endif  // HORIZON_PIPELINE_DOCUMENT_STORE_H_
