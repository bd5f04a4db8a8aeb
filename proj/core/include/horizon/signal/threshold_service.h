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

#ifndef HORIZON_SIGNAL_THRESHOLD_SERVICE_H_
#define HORIZON_SIGNAL_THRESHOLD_SERVICE_H_

#include <atomic>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "horizon/common/clock.h"
#include "horizon/signal/circuit_breaker.h"
#include "horizon/signal/signal.h"
#include "horizon/signal/threshold_cache.h"

namespace horizon::signal {

struct ThresholdRequest {
  std::string query;
  temporal::TimePoint search_time = temporal::TimePoint::Year(1970);
  // Documents to reason over; empty lets the source retrieve its own.
  std::vector<std::string> docids;
};

struct ComputedThreshold {
  temporal::TimePoint t_exp = temporal::TimePoint::Year(1970);
  double s_self = 0.0;
};

// The expensive path: extraction, inference and fusion. Throws Error on
// failure.
class ThresholdSource {
 public:
  virtual ~ThresholdSource() = default;
  virtual ComputedThreshold Compute(const ThresholdRequest& request, const Deadline& deadline) = 0;
};

struct ThresholdResult {
  std::optional<temporal::TimePoint> t_exp;
  Provenance provenance = Provenance::kFallback;
  double s_self = 0.0;
  // Why the fallback was taken; empty otherwise.
  std::string reason;
};

struct ThresholdServiceOptions {
  Millis deadline{50};
  SanityBounds sanity;
};

struct ThresholdServiceStats {
  std::uint64_t requests = 0;
  std::uint64_t cache_hits = 0;
  std::uint64_t source_calls = 0;
  std::uint64_t fallbacks = 0;
};

// Tiered threshold acquisition: fresh cache entry, else the source under
// the circuit breaker and a deadline (sanity-checked, then cached), else a
// fallback. Never throws to callers.
//
// Breaker accounting: backend faults, deadline overruns, sanity rejections,
// corrupt cache records and unexpected exceptions count as failures. A
// source that runs but finds no usable evidence (no evidence, no verdict,
// unsupported verdict) counts as a success for the breaker and still yields
// a fallback. Two concurrent misses on one key may both compute; the last
// write wins.
class ThresholdService {
 public:
  ThresholdService(std::shared_ptr<ThresholdSource> source, std::shared_ptr<ThresholdCache> cache,
                   std::shared_ptr<CircuitBreaker> breaker, const Clock& clock,
                   ThresholdServiceOptions options);

  ThresholdResult GetThreshold(const ThresholdRequest& request);

  // get_threshold + expiry flag. Fallback forces f_exp = 0.
  ExpirySignal MakeSignal(const ThresholdRequest& request, const temporal::TimePoint& doc_time);
  ExpirySignal MakeSignal(const ThresholdRequest& request, const extraction::Document& doc,
                          TimeFactorPolicy policy,
                          const ContentTimeEstimator* estimator = nullptr);

  // Signal for a threshold already obtained.
  ExpirySignal SignalFor(const ThresholdResult& threshold, const temporal::TimePoint& doc_time) const;

  ThresholdServiceStats stats() const;
  CircuitBreaker& breaker() { return *breaker_; }
  ThresholdCache& cache() { return *cache_; }

 private:
  ThresholdResult Fallback(std::string reason);

  std::shared_ptr<ThresholdSource> source_;
  std::shared_ptr<ThresholdCache> cache_;
  std::shared_ptr<CircuitBreaker> breaker_;
  const Clock& clock_;
  ThresholdServiceOptions options_;
  std::atomic<std::uint64_t> requests_{0};
  std::atomic<std::uint64_t> cache_hits_{0};
  std::atomic<std::uint64_t> source_calls_{0};
  std::atomic<std::uint64_t> fallbacks_{0};
};

}  // namespace horizon::signal

#endif  // HORIZON_SIGNAL_THRESHOLD_SERVICE_H_
