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

#include "horizon/extraction/tokenizer.h"

#include <cctype>
#include <fstream>

#include "horizon/common/error.h"

namespace horizon::extraction {
namespace {

const char* const kDefaultStopwords[] = {
    "a",     "about", "after", "all",   "also",  "an",    "and",   "any",   "are",  "as",
    "at",    "be",    "been",  "before", "being", "but",  "by",    "can",   "could", "did",
    "do",    "does",  "for",   "from",  "had",   "has",   "have",  "he",    "her",  "his",
    "how",   "i",     "if",    "in",    "into",  "is",    "it",    "its",   "more", "most",
    "new",   "no",    "not",   "of",    "on",    "or",    "our",   "out",   "over", "said",
    "she",   "so",    "some",  "than",  "that",  "the",   "their", "them",  "then", "there",
    "these", "they",  "this",  "those", "to",    "up",    "was",   "we",    "were", "what",
    "when",  "where", "which", "while", "who",   "will",  "with",  "would", "you",  "your",
};

bool IsWordByte(unsigned char c) { return std::isalnum(c) || c >= 0x80; }

}  // namespace

Tokenizer::Tokenizer()
    : stopwords_(std::begin(kDefaultStopwords), std::end(kDefaultStopwords)) {}

Tokenizer::Tokenizer(std::unordered_set<std::string> stopwords)
    : stopwords_(std::move(stopwords)) {}

Tokenizer Tokenizer::FromStopwordFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot open stopword list: " + path);
  std::unordered_set<std::string> words;
  std::string line;
  Tokenizer plain{std::unordered_set<std::string>{}};
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    for (auto& w : plain.Words(line)) words.insert(std::move(w));
  }
  return Tokenizer(std::move(words));
}

std::vector<std::string> Tokenizer::Words(std::string_view text) const {
  std::vector<std::string> out;
  std::string current;
  for (char ch : text) {
    auto c = static_cast<unsigned char>(ch);
    if (IsWordByte(c)) {
      current.push_back(c < 0x80 ? static_cast<char>(std::tolower(c)) : ch);
    } else if (!current.empty()) {
      out.push_back(std::move(current));
      current.clear();
    }
  }
  if (!current.empty()) out.push_back(std::move(current));
  return out;
}

std::vector<std::string> Tokenizer::ContentWords(std::string_view text) const {
  auto words = Words(text);
  std::erase_if(words, [&](const std::string& w) { return IsStopword(w); });
  return words;
}

bool Tokenizer::IsStopword(std::string_view word) const {
  return stopwords_.contains(std::string(word));
}

}  // namespace horizon::extraction
