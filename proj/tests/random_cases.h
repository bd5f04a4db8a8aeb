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

#ifndef HORIZON_TESTS_RANDOM_CASES_H_
#define HORIZON_TESTS_RANDOM_CASES_H_

// Randomized inputs shared by the unit tests and the acceptance binary. Each
// case is built twice: once as library types, once as plain oracle values.

#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "horizon/extraction/chunking.h"
#include "horizon/extraction/query_anchor.h"
#include "horizon/fusion/fusion.h"
#include "horizon/temporal/time_point.h"
#include "oracles.h"

namespace horizon::testing {

inline temporal::TimePoint ToTimePoint(const oracle::Cal& c) {
  if (c.quarter) return temporal::TimePoint::Quarter(c.year, c.quarter);
  if (!c.month) return temporal::TimePoint::Year(c.year);
  if (!c.day) return temporal::TimePoint::Month(c.year, c.month);
  return temporal::TimePoint::Day(c.year, c.month, c.day);
}

inline oracle::Cal RandomCal(std::mt19937_64& rng, int year_lo, int year_hi, bool day_only = false) {
  oracle::Cal c;
  c.year = year_lo + static_cast<int>(rng() % static_cast<unsigned>(year_hi - year_lo + 1));
  const unsigned kind = day_only ? 3 : static_cast<unsigned>(rng() % 4);
  if (kind == 1) {
    c.quarter = 1 + static_cast<int>(rng() % 4);
  } else if (kind >= 2) {
    c.month = 1 + static_cast<int>(rng() % 12);
    if (kind == 3) c.day = 1 + static_cast<int>(rng() % 28);
  }
  return c;
}

struct ScoreCase {
  extraction::FocusedChunk chunk;
  extraction::QueryAnchor anchor;
  temporal::TimePoint reference = temporal::TimePoint::Year(2025);
  oracle::ChunkCase expected;
};

// Words the built-in tokenizer keeps, plus a few it drops.
inline const std::vector<std::string>& ContentVocabulary() {
  static const std::vector<std::string> kWords = {
      "fire", "rescue", "tower", "policy", "tax", "league", "final", "storm",
      "harbor", "bridge", "metro", "school", "vaccine", "market", "festival", "transit"};
  return kWords;
}
inline const std::set<std::string>& OracleStopwords() {
  static const std::set<std::string> kStop = {"the", "of", "and", "on", "was"};
  return kStop;
}

// About a third of the cases contain no query keyword at all.
inline ScoreCase RandomScoreCase(std::mt19937_64& rng) {
  const auto& vocab = ContentVocabulary();
  const std::vector<std::string> stop(OracleStopwords().begin(), OracleStopwords().end());
  ScoreCase sc;
  sc.reference = temporal::TimePoint::Day(2025, 1 + static_cast<int>(rng() % 12),
                                          1 + static_cast<int>(rng() % 28));
  sc.expected.reference = {sc.reference.year(), 0, sc.reference.month(), sc.reference.day()};

  // Keywords: 1-4 distinct words from the first half of the vocabulary.
  std::vector<std::string> pool(vocab.begin(), vocab.begin() + 8);
  std::shuffle(pool.begin(), pool.end(), rng);
  const std::size_t nk = 1 + rng() % 4;
  sc.anchor.keywords.assign(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(nk));
  sc.expected.keywords = sc.anchor.keywords;

  // Sentences: 1-5 sentences of 2-8 words; a third of the cases draw only
  // from the second half so no keyword appears.
  const bool no_keyword = rng() % 3 == 0;
  const std::size_t ns = 1 + rng() % 5;
  std::string text;
  for (std::size_t s = 0; s < ns; ++s) {
    std::string sentence;
    const std::size_t nw = 2 + rng() % 7;
    for (std::size_t w = 0; w < nw; ++w) {
      std::string word;
      if (rng() % 5 == 0) {
        word = stop[rng() % stop.size()];
      } else {
        word = no_keyword ? vocab[8 + rng() % 8] : vocab[rng() % vocab.size()];
      }
      if (rng() % 4 == 0) word[0] = static_cast<char>(word[0] - 'a' + 'A');
      if (!sentence.empty()) sentence += rng() % 6 == 0 ? ", " : " ";
      sentence += word;
    }
    sentence += ".";
    sc.chunk.sentences.push_back(sentence);
    text += (text.empty() ? "" : " ") + sentence;
  }
  sc.expected.tokens = oracle::Tokenize(text, OracleStopwords());

  const std::size_t na = rng() % 4;
  std::vector<temporal::TimePoint> anchors;
  for (std::size_t i = 0; i < na; ++i) {
    auto c = RandomCal(rng, 2022, 2025);
    sc.expected.anchors.push_back(c);
    anchors.push_back(ToTimePoint(c));
  }
  std::sort(anchors.begin(), anchors.end());
  anchors.erase(std::unique(anchors.begin(), anchors.end()), anchors.end());
  sc.chunk.anchor_times = anchors;

  if (rng() % 2) {
    auto pub = RandomCal(rng, 2022, 2025, /*day_only=*/true);
    sc.expected.pub = pub;
    sc.chunk.pub_time = ToTimePoint(pub);
  }
  if (rng() % 2) {
    const std::size_t nq = 1 + rng() % 2;
    for (std::size_t i = 0; i < nq; ++i) {
      auto q = RandomCal(rng, 2023, 2025);
      sc.expected.query_times.push_back(q);
      sc.anchor.temporal_entities.push_back(ToTimePoint(q));
    }
  }
  sc.expected.alpha = static_cast<double>(rng() % 101) / 100.0;
  sc.expected.lambda = 0.001 + static_cast<double>(rng() % 1000) / 10000.0;
  return sc;
}

struct FusionCase {
  std::vector<temporal::TimePoint> candidates;
  extraction::FocusedChunkSet focus;
  std::vector<oracle::Cal> oracle_candidates;
  std::vector<oracle::VoteChunk> oracle_chunks;
};

// Up to 6 distinct candidates and up to 10 chunks. Weights come from a coarse
// grid so exact ties occur often.
inline FusionCase RandomFusionCase(std::mt19937_64& rng) {
  FusionCase fc;
  const std::size_t nc = 1 + rng() % 6;
  while (fc.candidates.size() < nc) {
    auto c = RandomCal(rng, 2025, 2026);
    auto t = ToTimePoint(c);
    if (std::find(fc.candidates.begin(), fc.candidates.end(), t) != fc.candidates.end()) continue;
    fc.candidates.push_back(t);
    fc.oracle_candidates.push_back(c);
  }
  const std::size_t nch = rng() % 11;
  for (std::size_t i = 0; i < nch; ++i) {
    extraction::FocusedChunk chunk;
    oracle::VoteChunk oc;
    chunk.authority = static_cast<double>(rng() % 5) / 4.0;
    chunk.s_rel = static_cast<double>(rng() % 5) / 4.0;
    oc.weight = chunk.authority * chunk.s_rel;
    const std::size_t na = rng() % 3;
    std::vector<temporal::TimePoint> anchors;
    for (std::size_t a = 0; a < na; ++a) {
      // Half the anchors reuse a candidate's fields so alignment is common.
      oracle::Cal c = rng() % 2 ? fc.oracle_candidates[rng() % nc] : RandomCal(rng, 2025, 2026);
      oc.anchors.push_back(c);
      anchors.push_back(ToTimePoint(c));
    }
    std::sort(anchors.begin(), anchors.end());
    anchors.erase(std::unique(anchors.begin(), anchors.end()), anchors.end());
    chunk.anchor_times = anchors;
    chunk.sentences = {"chunk " + std::to_string(i)};
    fc.focus.chunks.push_back(chunk);
    fc.oracle_chunks.push_back(oc);
  }
  return fc;
}

}  // namespace horizon::testing

#endif  // HORIZON_TESTS_RANDOM_CASES_H_
