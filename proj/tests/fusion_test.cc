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

#include <random>

#include <gtest/gtest.h>

#include "horizon/common/error.h"
#include "horizon/fusion/fusion.h"
#include "horizon/inference/rule_table.h"
#include "oracles.h"
#include "random_cases.h"
#include "test_util.h"

namespace horizon::fusion {
namespace {

using horizon::testing::Day;
using temporal::TimePoint;

extraction::FocusedChunk Chunk(double authority, double s_rel, std::vector<TimePoint> anchors) {
  extraction::FocusedChunk c;
  c.authority = authority;
  c.s_rel = s_rel;
  c.anchor_times = std::move(anchors);
  c.sentences = {"evidence"};
  return c;
}

TEST(ChunkWeightTest, ProductOfAuthorityAndRelevance) {
  EXPECT_DOUBLE_EQ(ChunkWeight(Chunk(1.0, 0.8, {})), 0.8);
  EXPECT_EQ(ChunkWeight(Chunk(0.0, 0.9, {})), 0.0);
  EXPECT_DOUBLE_EQ(ChunkWeight(Chunk(0.5, 0.6, {})), 0.3);
}

TEST(AlignmentTest, ExactContainmentAndDisjoint) {
  EXPECT_EQ(AlignmentIndicator(Day("2025-06-02"), Chunk(1, 1, {Day("2025-06-02")})), 1);
  EXPECT_EQ(AlignmentIndicator(TimePoint::Month(2025, 6), Chunk(1, 1, {Day("2025-06-15")})), 1);
  EXPECT_EQ(AlignmentIndicator(Day("2025-06-02"), Chunk(1, 1, {Day("2024-01-01")})), 0);
  EXPECT_EQ(AlignmentIndicator(Day("2025-06-02"), Chunk(1, 1, {})), 0);
}

TEST(AlignmentTest, ContextLetsRuleHorizonAlign) {
  // A breaking-news report of an event on 2025-05-30 reads as a horizon of
  // 2025-06-02 at search time 2025-06-05, which the anchor alone does not hit.
  auto rules = inference::RuleTable::Default();
  AlignmentContext ctx;
  ctx.rules = &rules;
  ctx.profile = {"breaking_news", 3};
  ctx.search_time = Day("2025-06-05");
  auto doc = horizon::testing::MakeDoc("f", "Fire", {"The fire was extinguished on 2025-05-30."},
                                       "2025-05-30");
  auto chunks = horizon::testing::DefaultExtractor()->Candidates(doc);
  ASSERT_EQ(chunks.size(), 1u);
  const auto& chunk = chunks[0];
  auto reading = rules.Read(chunk, ctx.profile, ctx.search_time);
  ASSERT_TRUE(reading.has_value());
  EXPECT_EQ(AlignmentIndicator(reading->horizon, chunk), 0);
  EXPECT_EQ(AlignmentIndicator(reading->horizon, chunk, &ctx), 1);
}

TEST(FuseTest, WeightedVote) {
  std::vector<TimePoint> candidates = {Day("2025-06-01"), Day("2025-06-10")};
  extraction::FocusedChunkSet focus;
  focus.chunks = {Chunk(1.0, 0.9, {Day("2025-06-01")}), Chunk(1.0, 0.4, {Day("2025-06-10")}),
                  Chunk(1.0, 0.3, {Day("2025-06-10")})};
  inference::InferenceOutcome outcome;
  outcome.s_self = 0.75;
  auto v = Fuse(candidates, focus, outcome);
  EXPECT_EQ(v.t_exp, Day("2025-06-01"));
  EXPECT_DOUBLE_EQ(v.SupportFor(Day("2025-06-01")), 0.9);
  EXPECT_DOUBLE_EQ(v.SupportFor(Day("2025-06-10")), 0.7);
  EXPECT_FALSE(v.tie_broken);
  EXPECT_EQ(v.s_self, 0.75);
  EXPECT_EQ(v.chunk_count, 3u);
}

TEST(FuseTest, SingletonAndTie) {
  extraction::FocusedChunkSet focus;
  focus.chunks = {Chunk(0.5, 0.2, {Day("2025-06-01")})};
  std::vector<TimePoint> one = {Day("2025-06-01")};
  EXPECT_EQ(Fuse(one, focus, {}).t_exp, Day("2025-06-01"));

  focus.chunks = {Chunk(1.0, 0.5, {Day("2025-06-10")}), Chunk(1.0, 0.5, {Day("2025-06-01")})};
  std::vector<TimePoint> two = {Day("2025-06-10"), Day("2025-06-01")};
  auto v = Fuse(two, focus, {});
  EXPECT_EQ(v.t_exp, Day("2025-06-01"));
  EXPECT_TRUE(v.tie_broken);
}

TEST(FuseTest, ErrorsOnNoCandidatesOrNoSupport) {
  extraction::FocusedChunkSet focus;
  focus.chunks = {Chunk(0.0, 0.9, {Day("2025-06-01")}), Chunk(1.0, 1.0, {Day("2024-01-01")})};
  std::vector<TimePoint> none;
  std::vector<TimePoint> c = {Day("2025-06-01")};
  try {
    Fuse(none, focus, {});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidArgument);
  }
  try {
    Fuse(c, focus, {});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUnsupportedVerdict);
  }
}

TEST(FuseTest, DuplicateCandidatesCollapse) {
  extraction::FocusedChunkSet focus;
  focus.chunks = {Chunk(1.0, 1.0, {Day("2025-06-01")})};
  std::vector<TimePoint> c = {Day("2025-06-01"), Day("2025-06-01")};
  auto v = Fuse(c, focus, {});
  EXPECT_EQ(v.support.size(), 1u);
  EXPECT_FALSE(v.tie_broken);
}

TEST(FuseTest, ZeroWeightChunkChangesNothing) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    auto fc = horizon::testing::RandomFusionCase(rng);
    auto with = fc.focus;
    with.chunks.push_back(Chunk(0.0, 1.0, {fc.candidates.back()}));
    try {
      auto a = Fuse(fc.candidates, fc.focus, {});
      auto b = Fuse(fc.candidates, with, {});
      EXPECT_EQ(a.t_exp, b.t_exp);
      EXPECT_EQ(a.support, b.support);
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kUnsupportedVerdict);
      EXPECT_THROW(Fuse(fc.candidates, with, {}), Error);
    }
  }
}

TEST(FuseTest, InvariantUnderPositiveWeightScaling) {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 200; ++i) {
    auto fc = horizon::testing::RandomFusionCase(rng);
    auto scaled = fc.focus;
    for (auto& c : scaled.chunks) c.authority *= 0.5;
    try {
      auto a = Fuse(fc.candidates, fc.focus, {});
      auto b = Fuse(fc.candidates, scaled, {});
      EXPECT_EQ(a.t_exp, b.t_exp) << i;
      EXPECT_EQ(a.tie_broken, b.tie_broken) << i;
    } catch (const Error&) {
      EXPECT_THROW(Fuse(fc.candidates, scaled, {}), Error);
    }
  }
}

TEST(FuseTest, AddingSupportToWinnerKeepsIt) {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 200; ++i) {
    auto fc = horizon::testing::RandomFusionCase(rng);
    try {
      auto a = Fuse(fc.candidates, fc.focus, {});
      auto more = fc.focus;
      more.chunks.push_back(Chunk(1.0, 0.5, {a.t_exp}));
      auto b = Fuse(fc.candidates, more, {});
      // Extra evidence for the winner may also raise candidates nested with
      // it, but never lets an unrelated candidate overtake.
      EXPECT_TRUE(b.t_exp == a.t_exp || temporal::Aligned(b.t_exp, a.t_exp)) << i;
    } catch (const Error&) {
    }
  }
}

TEST(FuseTest, MatchesBruteForceOracle) {
  std::mt19937_64 rng(20250602);
  int ties = 0;
  int unsupported = 0;
  for (int i = 0; i < 500; ++i) {
    auto fc = horizon::testing::RandomFusionCase(rng);
    auto want = oracle::BruteForceVote(fc.oracle_candidates, fc.oracle_chunks, kSupportTieTolerance);
    if (!want) {
      ++unsupported;
      try {
        Fuse(fc.candidates, fc.focus, {});
        ADD_FAILURE() << "case " << i << " should be unsupported";
      } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::kUnsupportedVerdict);
      }
      continue;
    }
    auto v = Fuse(fc.candidates, fc.focus, {});
    EXPECT_EQ(v.t_exp, fc.candidates[want->first]) << "case " << i;
    EXPECT_EQ(v.tie_broken, want->second) << "case " << i;
    ties += want->second;
  }
  EXPECT_GT(ties, 20);
  EXPECT_GT(unsupported, 5);
}

}  // namespace
}  // namespace horizon::fusion
