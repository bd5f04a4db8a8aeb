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

#include "horizon/eval/metrics.h"

#include <algorithm>
#include <limits>
#include <numeric>

#include "horizon/common/error.h"

namespace horizon::eval {

double Median(std::vector<double> values) {
  if (values.empty()) throw Error(ErrorCode::kInvalidArgument, "median of an empty sample");
  std::sort(values.begin(), values.end());
  const std::size_t n = values.size();
  return n % 2 ? values[n / 2] : (values[n / 2 - 1] + values[n / 2]) / 2.0;
}

std::optional<DayAway> DayAwayAtK(std::span<const double> ranked_ages, int k) {
  if (k < 1) throw Error(ErrorCode::kInvalidArgument, "k must be at least 1");
  if (ranked_ages.empty()) return std::nullopt;
  const std::size_t n = std::min(ranked_ages.size(), static_cast<std::size_t>(k));
  std::vector<double> top(ranked_ages.begin(), ranked_ages.begin() + static_cast<long>(n));
  const double mean = std::accumulate(top.begin(), top.end(), 0.0) / static_cast<double>(n);
  return DayAway{Median(std::move(top)), mean};
}

std::optional<DayAway> DayAwayAtK(std::span<const temporal::TimePoint> ranked_times, int k,
                                  const temporal::TimePoint& search_time) {
  std::vector<double> ages;
  ages.reserve(ranked_times.size());
  for (const auto& t : ranked_times) ages.push_back(temporal::ElapsedDays(t, search_time));
  return DayAwayAtK(ages, k);
}

PairCounts CountPairs(std::span<const int> ranked_labels) {
  PairCounts c;
  for (std::size_t i = 0; i < ranked_labels.size(); ++i) {
    for (std::size_t j = i + 1; j < ranked_labels.size(); ++j) {
      if (ranked_labels[i] > ranked_labels[j]) {
        ++c.concordant;
      } else if (ranked_labels[i] < ranked_labels[j]) {
        ++c.discordant;
      }
    }
  }
  return c;
}

std::optional<double> PairwiseOrderingRatio(const PairCounts& counts) {
  if (counts.concordant + counts.discordant == 0) return std::nullopt;
  if (counts.discordant == 0) return std::numeric_limits<double>::infinity();
  return static_cast<double>(counts.concordant) / static_cast<double>(counts.discordant);
}

}  // namespace horizon::eval
