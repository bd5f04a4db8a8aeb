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

#include <filesystem>
#include <fstream>
#include <random>
#include <thread>

#include <gtest/gtest.h>

#include "fakes.h"
#include "horizon/common/error.h"
#include "horizon/signal/circuit_breaker.h"
#include "horizon/signal/features.h"
#include "horizon/signal/query_key.h"
#include "horizon/signal/signal.h"
#include "horizon/signal/threshold_cache.h"
#include "horizon/signal/threshold_service.h"
#include "test_util.h"

namespace horizon::signal {
namespace {

namespace fs = std::filesystem;
using horizon::testing::Day;
using horizon::testing::MakeDoc;
using horizon::testing::ScriptedSource;
using temporal::TimePoint;

constexpr auto kDay = std::chrono::hours(24);

Instant At(const char* day) { return Instant(Day(day).first_day().time_since_epoch()); }

fs::path TempFile(const std::string& name) {
  auto dir = fs::temp_directory_path() / ("horizon_signal_test_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  auto p = dir / name;
  fs::remove(p);
  return p;
}

// ---- expiry flag, time factor, sanity ------------------------------------

TEST(ExpiryFlagTest, StrictlyAfter) {
  EXPECT_EQ(ExpiryFlag(Day("2025-06-03"), Day("2025-06-02")), 1);
  EXPECT_EQ(ExpiryFlag(Day("2025-06-02"), Day("2025-06-02")), 0);
  EXPECT_EQ(ExpiryFlag(Day("2025-05-01"), Day("2025-06-02")), 0);
  // Midpoints: June 2025 (midpoint 06-15) is after 06-02.
  EXPECT_EQ(ExpiryFlag(TimePoint::Month(2025, 6), Day("2025-06-02")), 1);
}

class FixedEstimator final : public ContentTimeEstimator {
 public:
  enum class Mode { kFound, kNothing, kThrow };
  explicit FixedEstimator(Mode m) : mode_(m) {}
  std::optional<TimePoint> LatestEvent(const extraction::Document&) const override {
    if (mode_ == Mode::kThrow) throw Error(ErrorCode::kBackendTimeout, "slow");
    if (mode_ == Mode::kNothing) return std::nullopt;
    return Day("2025-05-28");
  }

 private:
  Mode mode_;
};

TEST(TimeFactorTest, Policies) {
  auto doc = MakeDoc("d", "t", {"The fire started on 2025-05-28."}, "2025-05-30");
  EXPECT_EQ(DocumentTimeFactor(doc, TimeFactorPolicy::kPubTime), Day("2025-05-30"));
  FixedEstimator found(FixedEstimator::Mode::kFound);
  FixedEstimator nothing(FixedEstimator::Mode::kNothing);
  FixedEstimator throws(FixedEstimator::Mode::kThrow);
  EXPECT_EQ(DocumentTimeFactor(doc, TimeFactorPolicy::kContentTime, &found), Day("2025-05-28"));
  EXPECT_EQ(DocumentTimeFactor(doc, TimeFactorPolicy::kContentTime, &nothing), Day("2025-05-30"));
  EXPECT_EQ(DocumentTimeFactor(doc, TimeFactorPolicy::kContentTime, &throws), Day("2025-05-30"));
  EXPECT_EQ(DocumentTimeFactor(doc, TimeFactorPolicy::kContentTime), Day("2025-05-30"));
  EXPECT_EQ(TimeFactorPolicyFromName("content_time"), TimeFactorPolicy::kContentTime);
  EXPECT_FALSE(TimeFactorPolicyFromName("bogus").has_value());
}

TEST(SanityTest, Bounds) {
  const auto search = Day("2025-06-01");
  SanityBounds b;
  EXPECT_TRUE(SanityCheck(temporal::AddDays(search, 30), search, b));
  EXPECT_FALSE(SanityCheck(temporal::AddDays(search, 3000), search, b));
  EXPECT_FALSE(SanityCheck(temporal::AddDays(search, -5000), search, b));
  EXPECT_TRUE(SanityCheck(temporal::AddDays(search, 1825), search, b));
  EXPECT_FALSE(SanityCheck(temporal::AddDays(search, 1826), search, b));
  EXPECT_TRUE(SanityCheck(temporal::AddDays(search, -3650), search, b));
  EXPECT_FALSE(SanityCheck(temporal::AddDays(search, -3651), search, b));
}

// ---- query key -----------------------------------------------------------

TEST(QueryKeyTest, NormalizesCaseWhitespaceAndForm) {
  EXPECT_EQ(NormalizeQueryKey("  Hong   KONG\tFire \n"), "hong kong fire");
  // No-break space, ideographic space and line separator count as whitespace.
  EXPECT_EQ(NormalizeQueryKey("hong\xc2\xa0" "kong\xe3\x80\x80" "fire\xe2\x80\xa8"), "hong kong fire");
  // Decomposed E + combining acute composes to U+00E9 and folds to lowercase.
  EXPECT_EQ(NormalizeQueryKey("CAFE\xcc\x81"), "caf\xc3\xa9");
  EXPECT_EQ(NormalizeQueryKey("CAF\xc3\x89"), "caf\xc3\xa9");
  EXPECT_EQ(NormalizeQueryKey("\xff" "abc"), "\xef\xbf\xbd" "abc");
  EXPECT_EQ(NormalizeQueryKey(""), "");
}

// ---- cache ---------------------------------------------------------------

TEST(CacheRecordTest, RoundTripAndErrors) {
  ThresholdCacheEntry e{"hong kong fire", Day("2025-06-02"), At("2025-06-02"), 7, Provenance::kBackend,
                        0.75};
  EXPECT_EQ(ParseCacheRecord(FormatCacheRecord(e)), e);
  e.t_exp = TimePoint::Quarter(2025, 3);
  EXPECT_EQ(ParseCacheRecord(FormatCacheRecord(e)), e);
  for (const char* bad : {"", "a\tb", "k\t2025-13-01\t0\t7\tbackend\t1",
                          "k\t2025-06-01\tx\t7\tbackend\t1", "k\t2025-06-01\t0\t7\tmagic\t1",
                          "k\t2025-06-01\t0\t-1\tbackend\t1", "k\t2025-06-01\t0\t7\tbackend\tnan"}) {
    EXPECT_THROW(ParseCacheRecord(bad), Error) << bad;
  }
}

TEST(CacheTest, TtlBoundary) {
  ManualClock clock(At("2025-06-01"));
  ThresholdCache cache(clock, 7);
  cache.Put("Fire", Day("2025-06-02"), 1.0);
  EXPECT_EQ(cache.Lookup("fire").status, LookupStatus::kHit);
  clock.Advance(7 * kDay);
  EXPECT_EQ(cache.Lookup("FIRE").status, LookupStatus::kHit);
  clock.Advance(std::chrono::seconds(1));
  EXPECT_EQ(cache.Lookup("fire").status, LookupStatus::kMiss);
}

TEST(CacheTest, CorruptRecordReportedOnceThenEvicted) {
  ManualClock clock(At("2025-06-01"));
  ThresholdCache cache(clock, 7);
  cache.ApplyRecordLine("bad key\tnot-a-date\t0\t7\tbackend\t1");
  auto r = cache.Lookup("bad key");
  EXPECT_EQ(r.status, LookupStatus::kCorrupt);
  EXPECT_FALSE(r.error.empty());
  EXPECT_EQ(cache.Lookup("bad key").status, LookupStatus::kMiss);
}

TEST(CacheTest, PersistsReplaysAndCompacts) {
  const auto path = TempFile("cache.tsv");
  ManualClock clock(At("2025-06-01"));
  {
    ThresholdCache cache(clock, 7, path.string());
    cache.Put("fire", Day("2025-06-02"), 1.0);
    cache.Put("fire", Day("2025-06-03"), 0.5);  // later record wins
    cache.Put("policy", Day("2019-12-31"), 1.0);
  }
  {
    std::ofstream out(path, std::ios::app);
    out << "garbage line\n";
  }
  clock.Advance(kDay);
  {
    ThresholdCache cache(clock, 7, path.string());
    EXPECT_EQ(cache.load_errors(), 1u);
    auto hit = cache.Lookup("fire");
    ASSERT_EQ(hit.status, LookupStatus::kHit);
    EXPECT_EQ(hit.entry->t_exp, Day("2025-06-03"));
    EXPECT_EQ(hit.entry->s_self, 0.5);
    EXPECT_EQ(cache.size(), 2u);
  }
  // Past the TTL compaction drops everything; the header stays.
  clock.Advance(30 * kDay);
  {
    ThresholdCache cache(clock, 7, path.string());
    cache.Compact();
  }
  std::ifstream in(path);
  std::string first, second;
  std::getline(in, first);
  EXPECT_EQ(first, kCacheHeader);
  EXPECT_FALSE(static_cast<bool>(std::getline(in, second)));
}

TEST(CacheTest, ConcurrentReadersAndWriters) {
  ManualClock clock(At("2025-06-01"));
  ThresholdCache cache(clock, 7);
  std::vector<std::thread> threads;
  for (int t = 0; t < 4; ++t) {
    threads.emplace_back([&, t] {
      for (int i = 0; i < 200; ++i) {
        const std::string key = "q" + std::to_string(i % 20);
        if ((i + t) % 3 == 0) cache.Put(key, Day("2025-06-02"), 1.0);
        auto r = cache.Lookup(key);
        EXPECT_NE(r.status, LookupStatus::kCorrupt);
      }
    });
  }
  for (auto& th : threads) th.join();
  EXPECT_EQ(cache.size(), 20u);
}

// ---- breaker -------------------------------------------------------------

TEST(BreakerTest, OpensAfterThresholdAndRecoversThroughProbes) {
  ManualClock clock(At("2025-06-01"));
  CircuitBreaker b(clock, {3, Millis(1000), 2});
  for (int i = 0; i < 2; ++i) {
    ASSERT_TRUE(b.Allow());
    b.RecordFailure();
  }
  EXPECT_EQ(b.state(), BreakerState::kClosed);
  ASSERT_TRUE(b.Allow());
  b.RecordSuccess();  // success resets the streak
  for (int i = 0; i < 3; ++i) {
    ASSERT_TRUE(b.Allow());
    b.RecordFailure();
  }
  EXPECT_EQ(b.state(), BreakerState::kOpen);
  EXPECT_FALSE(b.Allow());
  clock.Advance(Millis(999));
  EXPECT_FALSE(b.Allow());
  clock.Advance(Millis(1));
  EXPECT_TRUE(b.Allow());
  EXPECT_EQ(b.state(), BreakerState::kHalfOpen);
  EXPECT_TRUE(b.Allow());
  EXPECT_FALSE(b.Allow());  // only two probes
  b.RecordSuccess();
  EXPECT_EQ(b.state(), BreakerState::kHalfOpen);
  b.RecordSuccess();
  EXPECT_EQ(b.state(), BreakerState::kClosed);
  EXPECT_EQ(b.Snapshot().consecutive_failures, 0);
}

TEST(BreakerTest, ProbeFailureReopens) {
  ManualClock clock(At("2025-06-01"));
  CircuitBreaker b(clock, {1, Millis(100), 1});
  ASSERT_TRUE(b.Allow());
  b.RecordFailure();
  clock.Advance(Millis(100));
  ASSERT_TRUE(b.Allow());
  b.RecordFailure();
  EXPECT_EQ(b.state(), BreakerState::kOpen);
  EXPECT_FALSE(b.Allow());
  EXPECT_EQ(b.Snapshot().opened_at, clock.Now());
}

TEST(BreakerTest, ForceHooks) {
  ManualClock clock(At("2025-06-01"));
  CircuitBreaker b(clock, {});
  b.ForceOpen();
  EXPECT_EQ(b.state(), BreakerState::kOpen);
  EXPECT_FALSE(b.Allow());
  b.ForceClosed();
  EXPECT_TRUE(b.Allow());
  b.RecordSuccess();
  EXPECT_EQ(BreakerStateName(BreakerState::kHalfOpen), "half_open");
}

// ---- threshold service ---------------------------------------------------

struct ServiceRig {
  ManualClock clock{At("2025-06-02")};
  std::shared_ptr<ScriptedSource> source =
      std::make_shared<ScriptedSource>(ScriptedSource::Returns(Day("2025-06-02")));
  std::shared_ptr<ThresholdCache> cache = std::make_shared<ThresholdCache>(clock, 7);
  std::shared_ptr<CircuitBreaker> breaker =
      std::make_shared<CircuitBreaker>(clock, BreakerConfig{3, Millis(1000), 1});
  ThresholdService service{source, cache, breaker, clock, {}};

  ThresholdRequest Request(std::string q = "hong kong fire") { return {std::move(q), Day("2025-06-02"), {}}; }
};

TEST(ThresholdServiceTest, ColdThenWarm) {
  ServiceRig rig;
  auto first = rig.service.GetThreshold(rig.Request());
  EXPECT_EQ(first.provenance, Provenance::kBackend);
  EXPECT_EQ(first.t_exp, Day("2025-06-02"));
  EXPECT_EQ(rig.cache->size(), 1u);
  auto second = rig.service.GetThreshold(rig.Request("Hong  Kong FIRE"));
  EXPECT_EQ(second.provenance, Provenance::kCache);
  EXPECT_EQ(rig.source->calls(), 1);
  auto st = rig.service.stats();
  EXPECT_EQ(st.requests, 2u);
  EXPECT_EQ(st.cache_hits, 1u);
  EXPECT_EQ(st.source_calls, 1u);
  EXPECT_EQ(st.fallbacks, 0u);
}

TEST(ThresholdServiceTest, SignalComposition) {
  ServiceRig rig;
  auto fresh = rig.service.MakeSignal(rig.Request(), Day("2025-06-03"));
  EXPECT_EQ(fresh.f_exp, 1);
  EXPECT_EQ(fresh.t_exp_used, Day("2025-06-02"));
  EXPECT_EQ(rig.service.MakeSignal(rig.Request(), Day("2025-06-02")).f_exp, 0);
  EXPECT_EQ(rig.service.MakeSignal(rig.Request(), Day("2025-05-01")).f_exp, 0);
}

void ExpectFallback(const ExpirySignal& s) {
  EXPECT_EQ(s.f_exp, 0);
  EXPECT_EQ(s.provenance, Provenance::kFallback);
  EXPECT_FALSE(s.t_exp_used.has_value());
}

TEST(ThresholdServiceTest, FailClosedPaths) {
  const auto fresh_doc = Day("2030-01-01");
  {
    ServiceRig rig;
    rig.source->Set(ScriptedSource::Throws(ErrorCode::kBackendTimeout));
    ExpectFallback(rig.service.MakeSignal(rig.Request(), fresh_doc));
    EXPECT_EQ(rig.breaker->Snapshot().consecutive_failures, 1);
  }
  {
    ServiceRig rig;
    rig.source->Set(ScriptedSource::Throws(ErrorCode::kBackendSchema));
    ExpectFallback(rig.service.MakeSignal(rig.Request(), fresh_doc));
  }
  {
    ServiceRig rig;
    rig.source->Set(ScriptedSource::Overruns(rig.clock, Day("2025-06-02")));
    ExpectFallback(rig.service.MakeSignal(rig.Request(), fresh_doc));
    EXPECT_EQ(rig.cache->size(), 0u);
  }
  {
    ServiceRig rig;
    rig.source->Set(ScriptedSource::Returns(Day("2040-01-01")));
    auto r = rig.service.GetThreshold(rig.Request());
    EXPECT_EQ(r.provenance, Provenance::kFallback);
    EXPECT_NE(r.reason.find("sanity"), std::string::npos);
    EXPECT_EQ(rig.cache->size(), 0u);
  }
  {
    ServiceRig rig;
    rig.cache->ApplyRecordLine("hong kong fire\t???\t0\t7\tbackend\t1");
    ExpectFallback(rig.service.MakeSignal(rig.Request(), fresh_doc));
    EXPECT_EQ(rig.source->calls(), 0);
  }
  {
    ServiceRig rig;
    rig.breaker->ForceOpen();
    auto s = rig.service.MakeSignal(rig.Request(), fresh_doc);
    ExpectFallback(s);
    EXPECT_EQ(s.breaker_state, BreakerState::kOpen);
    EXPECT_EQ(rig.source->calls(), 0);
  }
  {
    ServiceRig rig;
    rig.source->Set([](const auto&, const auto&) -> ComputedThreshold { throw std::runtime_error("boom"); });
    ExpectFallback(rig.service.MakeSignal(rig.Request(), fresh_doc));
    EXPECT_EQ(rig.breaker->Snapshot().consecutive_failures, 1);
  }
}

TEST(ThresholdServiceTest, NoEvidenceIsNotABreakerFailure) {
  ServiceRig rig;
  rig.source->Set(ScriptedSource::Throws(ErrorCode::kNoEvidence));
  for (int i = 0; i < 5; ++i) ExpectFallback(rig.service.MakeSignal(rig.Request(), Day("2030-01-01")));
  EXPECT_EQ(rig.breaker->state(), BreakerState::kClosed);
  EXPECT_EQ(rig.cache->size(), 0u);
}

TEST(ThresholdServiceTest, RepeatedFaultsOpenTheBreaker) {
  ServiceRig rig;
  rig.source->Set(ScriptedSource::Throws(ErrorCode::kBackendTransport));
  for (int i = 0; i < 10; ++i) rig.service.GetThreshold(rig.Request());
  EXPECT_EQ(rig.source->calls(), 3);
  EXPECT_EQ(rig.breaker->state(), BreakerState::kOpen);
  EXPECT_EQ(rig.service.stats().fallbacks, 10u);
}

TEST(ThresholdServiceTest, ConcurrentRequestsNeverThrow) {
  ServiceRig rig;
  std::atomic<int> n{0};
  rig.source->Set([&](const auto&, const auto&) -> ComputedThreshold {
    if (n.fetch_add(1) % 2) throw Error(ErrorCode::kBackendTimeout, "x");
    return {Day("2025-06-02"), 1.0};
  });
  std::vector<std::thread> threads;
  for (int t = 0; t < 4; ++t) {
    threads.emplace_back([&, t] {
      for (int i = 0; i < 100; ++i) {
        auto s = rig.service.MakeSignal(rig.Request("q" + std::to_string((i + t) % 7)), Day("2025-06-03"));
        EXPECT_TRUE(s.provenance == Provenance::kFallback ? s.f_exp == 0 : s.f_exp == 1);
      }
    });
  }
  for (auto& th : threads) th.join();
  EXPECT_EQ(rig.service.stats().requests, 400u);
}

// ---- features ------------------------------------------------------------

TEST(FeaturesTest, CrossesFollowFlag) {
  auto doc = MakeDoc("d", "t", {}, "2025-05-30", 0.5);
  ExpirySignal zero;
  auto f0 = EmitFeatures(zero, doc, 0.7, Day("2025-05-30"), Day("2025-06-02"));
  EXPECT_EQ(f0.cross_rel, 0.0);
  EXPECT_EQ(f0.cross_auth, 0.0);
  EXPECT_EQ(f0.age_days, 3.0);

  ExpirySignal one;
  one.f_exp = 1;
  one.provenance = Provenance::kBackend;
  auto f1 = EmitFeatures(one, doc, 0.7, Day("2025-05-30"), Day("2025-06-02"));
  EXPECT_EQ(f1.cross_rel, 0.7);
  EXPECT_EQ(f1.cross_auth, 0.5);
  EXPECT_EQ(FeaturesFromJson(FeaturesToJson(f1)), f1);
}

TEST(FeaturesTest, JsonValidation) {
  EXPECT_THROW(FeaturesFromJson(R"({"f_exp":1})"), Error);
  EXPECT_THROW(FeaturesFromJson(
                   R"({"f_exp":1,"s_rel_doc":0.7,"authority":0.5,"cross_rel":0.1,"cross_auth":0.5,"age_days":3})"),
               Error);
  EXPECT_THROW(FeaturesFromJson(
                   R"({"f_exp":0,"s_rel_doc":0.7,"authority":0.5,"cross_rel":0,"cross_auth":0,"age_days":3,"x":1})"),
               Error);
}

}  // namespace
}  // namespace horizon::signal
