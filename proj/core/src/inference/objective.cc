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

#include "horizon/inference/objective.h"

#include <algorithm>
#include <cmath>
#include <cstdlib>

#include "horizon/common/error.h"

namespace horizon::inference {

double ConsistencyPenalty(double s_self) {
  if (!(s_self >= 0.0 && s_self <= 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "s_self must lie in [0, 1]");
  }
  return 1.0 - s_self;
}

int GranularityPenalty(const temporal::TimePoint& a, const temporal::TimePoint& b) {
  return std::abs(temporal::GranularityDepth(a) - temporal::GranularityDepth(b));
}

double TimeDistance(const temporal::TimePoint& a, const temporal::TimePoint& b,
                    double horizon_norm_days) {
  if (!(horizon_norm_days > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "horizon normalizer must be positive");
  }
  const double days = std::fabs(static_cast<double>(temporal::DaysBetween(a, b)));
  return std::min(days / horizon_norm_days, 1.0);
}

double TemporalObjective(double d_time, double l_gran, double l_cons, double lambda1,
                         double lambda2) {
  if (lambda1 < 0.0 || lambda2 < 0.0) {
    throw Error(ErrorCode::kInvalidArgument, "objective weights must be non-negative");
  }
  return d_time + lambda1 * l_gran + lambda2 * l_cons;
}

double ScorePrediction(const temporal::TimePoint& predicted, double s_self,
                       const temporal::TimePoint& target, const ObjectiveWeights& weights) {
  return TemporalObjective(TimeDistance(predicted, target, weights.horizon_norm_days),
                           GranularityPenalty(predicted, target), ConsistencyPenalty(s_self),
                           weights.lambda1, weights.lambda2);
}

}  // namespace horizon::inference
