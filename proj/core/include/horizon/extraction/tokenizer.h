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

#ifndef HORIZON_EXTRACTION_TOKENIZER_H_
#define HORIZON_EXTRACTION_TOKENIZER_H_

#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace horizon::extraction {

// Splits on ASCII whitespace and punctuation and lowercases ASCII letters.
// Bytes outside ASCII are kept as word characters. No stemming.
class Tokenizer {
 public:
  Tokenizer();  // built-in English stopword list
  explicit Tokenizer(std::unordered_set<std::string> stopwords);

  // One stopword per line; '#' starts a comment.
  static Tokenizer FromStopwordFile(const std::string& path);

  std::vector<std::string> Words(std::string_view text) const;
  // Words minus stopwords.
  std::vector<std::string> ContentWords(std::string_view text) const;

  bool IsStopword(std::string_view word) const;
  const std::unordered_set<std::string>& stopwords() const { return stopwords_; }

 private:
  std::unordered_set<std::string> stopwords_;
};

}  // namespace horizon::extraction

#endif  // HORIZON_EXTRACTION_TOKENIZER_H_
