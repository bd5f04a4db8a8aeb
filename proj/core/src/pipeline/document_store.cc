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

#include "horizon/pipeline/document_store.h"

#include <algorithm>

namespace horizon::pipeline {

DocumentStore::DocumentStore(std::vector<extraction::Document> docs,
                             const extraction::Tokenizer& tokenizer)
    : docs_(std::move(docs)) {
  vocab_.reserve(docs_.size());
  for (std::size_t i = 0; i < docs_.size(); ++i) {
    std::unordered_set<std::string> words;
    for (auto& w : tokenizer.Words(docs_[i].title)) words.insert(std::move(w));
    for (const auto& s : docs_[i].sentences) {
      for (auto& w : tokenizer.Words(s)) words.insert(std::move(w));
    }
    vocab_.push_back(std::move(words));
    by_id_.emplace(docs_[i].docid, i);
  }
}

const extraction::Document* DocumentStore::Find(std::string_view docid) const {
  auto it = by_id_.find(std::string(docid));
  return it == by_id_.end() ? nullptr : &docs_[it->second];
}

std::vector<const extraction::Document*> DocumentStore::Retrieve(
    std::span<const std::string> keywords, std::size_t limit) const {
  std::vector<std::pair<std::size_t, std::size_t>> hits;  // (hits, index)
  for (std::size_t i = 0; i < docs_.size(); ++i) {
    std::size_t n = 0;
    for (const auto& k : keywords) n += vocab_[i].count(k);
    if (n) hits.emplace_back(n, i);
  }
  std::stable_sort(hits.begin(), hits.end(),
                   [](const auto& a, const auto& b) { return a.first > b.first; });
  std::vector<const extraction::Document*> out;
  for (std::size_t i = 0; i < hits.size() && out.size() < limit; ++i) {
    out.push_back(&docs_[hits[i].second]);
  }
  return out;
}

std::vector<const extraction::Document*> DocumentStore::Resolve(
    std::span<const std::string> docids) const {
  std::vector<const extraction::Document*> out;
  for (const auto& id : docids) {
    if (const auto* d = Find(id)) out.push_back(d);
  }
  return out;
}

}  // namespace horizon::pipeline
