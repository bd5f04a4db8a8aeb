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

#ifndef HORIZON_SIGNAL_SIGNAL_H_
#define HORIZON_SIGNAL_SIGNAL_H_

#include <optional>
#include <string_view>

#include "horizon/extraction/document.h"
#include "horizon/signal/circuit_breaker.h"
#include "horizon/signal/threshold_cache.h"
#include "horizon/temporal/time_point.h"

namespace horizon::signal {

// 1 iff t_i is strictly after t_exp, comparing span midpoints.
int ExpiryFlag(const temporal::TimePoint& t_i, const temporal::TimePoint& t_exp);

enum class TimeFactorPolicy { kPubTime, kContentTime };

std::string_view TimeFactorPolicyName(TimeFactorPolicy p);
std::optional<TimeFactorPolicy> TimeFactorPolicyFromName(std::string_view name);

// Finds the most recent event a document reports, by reasoning over that
// document alone. May throw; callers fall back to the publication date.
class ContentTimeEstimator {
 public:
  virtual ~ContentTimeEstimator() = default;
  virtual std::optional<temporal::TimePoint> LatestEvent(const extraction::Document& doc) const = 0;
};

// The time that decides a document's freshness. The content-time policy
// falls back to pub_time when no estimator is given, it finds nothing, or it
// throws.
temporal::TimePoint DocumentTimeFactor(const extraction::Document& doc, TimeFactorPolicy policy,
                                       const ContentTimeEstimator* estimator = nullptr);

struct SanityBounds {
  long past_days = 3650;
  long future_days = 1825;
};

// False iff t_exp is more than past_days before or more than future_days
// after the search time.
bool SanityCheck(const temporal::TimePoint& t_exp, const temporal::TimePoint& search_time,
                 const SanityBounds& bounds);

struct ExpirySignal {
  int f_exp = 0;
  std::optional<temporal::TimePoint> t_exp_used;
  Provenance provenance = Provenance::kFallback;
  BreakerState breaker_state = BreakerState::kClosed;

  bool operator==(const ExpirySignal&) const = default;
};

}  // namespace horizon::signal

#endif  // HORIZON_SIGNAL_SIGNAL_H_
