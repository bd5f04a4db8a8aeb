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

#ifndef HORIZON_EVAL_METRICS_H_
#define HORIZON_EVAL_METRICS_H_

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "horizon/temporal/time_point.h"

namespace horizon::eval {

struct DayAway {
  double median = 0.0;
  double mean = 0.0;
};

// Median of a non-empty sample; the mean of the two middle values for even
// sizes. Throws Error(kInvalidArgument) when empty.
double Median(std::vector<double> values);

// Median and mean of the first min(k, n) ages. nullopt for an empty ranking.
// Throws Error(kInvalidArgument) for k < 1.
std::optional<DayAway> DayAwayAtK(std::span<const double> ranked_ages, int k);

// Ages are search_time minus each document time, in days, clamped at zero.
std::optional<DayAway> DayAwayAtK(std::span<const temporal::TimePoint> ranked_times, int k,
                                  const temporal::TimePoint& search_time);

struct PairCounts {
  std::uint64_t concordant = 0;
  std::uint64_t discordant = 0;

  PairCounts& operator+=(const PairCounts& o) {
    concordant += o.concordant;
    discordant += o.discordant;
    return *this;
  }
  bool operator==(const PairCounts&) const = default;
};

// Over all pairs (i ranked above j) with unequal labels: concordant when the
// higher label is ranked first. Equal labels are skipped.
PairCounts CountPairs(std::span<const int> ranked_labels);

// concordant / discordant; +infinity when only concordant pairs exist and
// nullopt when there are no pairs at all.
std::optional<double> PairwiseOrderingRatio(const PairCounts& counts);

}  // namespace horizon::eval

#endif  // HORIZON_EVAL_METRICS_H_
