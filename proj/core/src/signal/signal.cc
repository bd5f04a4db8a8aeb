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

#include "horizon/signal/signal.h"

#include <spdlog/spdlog.h>

namespace horizon::signal {

int ExpiryFlag(const temporal::TimePoint& t_i, const temporal::TimePoint& t_exp) {
  return temporal::DaysBetween(t_exp, t_i) > 0 ? 1 : 0;
}

std::string_view TimeFactorPolicyName(TimeFactorPolicy p) {
  return p == TimeFactorPolicy::kPubTime ? "pub_time" : "content_time";
}

std::optional<TimeFactorPolicy> TimeFactorPolicyFromName(std::string_view name) {
  if (name == "pub_time") return TimeFactorPolicy::kPubTime;
  if (name == "content_time") return TimeFactorPolicy::kContentTime;
  return std::nullopt;
}

temporal::TimePoint DocumentTimeFactor(const extraction::Document& doc, TimeFactorPolicy policy,
                                       const ContentTimeEstimator* estimator) {
  if (policy == TimeFactorPolicy::kPubTime || !estimator) return doc.pub_time;
  try {
    if (auto t = estimator->LatestEvent(doc)) return *t;
  } catch (const std::exception& e) {
    spdlog::debug("content time for {} unavailable: {}", doc.docid, e.what());
  }
  return doc.pub_time;
}

bool SanityCheck(const temporal::TimePoint& t_exp, const temporal::TimePoint& search_time,
                 const SanityBounds& bounds) {
  const long offset = temporal::DaysBetween(search_time, t_exp);
  return offset >= -bounds.past_days && offset <= bounds.future_days;
}

}  // namespace horizon::signal
