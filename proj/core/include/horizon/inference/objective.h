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

#ifndef HORIZON_INFERENCE_OBJECTIVE_H_
#define HORIZON_INFERENCE_OBJECTIVE_H_

#include "horizon/temporal/time_point.h"

namespace horizon::inference {

struct ObjectiveWeights {
  double lambda1 = 0.5;  // granularity term
  double lambda2 = 0.5;  // consistency term
  double horizon_norm_days = 365.0;
};

// 1 - s_self. Throws Error(kInvalidArgument) outside [0, 1].
double ConsistencyPenalty(double s_self);

// |D(a) - D(b)| on the year = 1, quarter/month = 2, day = 3 scale.
int GranularityPenalty(const temporal::TimePoint& a, const temporal::TimePoint& b);

// min(|midpoint difference in days| / horizon_norm_days, 1).
double TimeDistance(const temporal::TimePoint& a, const temporal::TimePoint& b,
                    double horizon_norm_days);

// d_time + lambda1 * l_gran + lambda2 * l_cons. Lower is better; this scores
// candidates and never trains anything.
double TemporalObjective(double d_time, double l_gran, double l_cons, double lambda1,
                         double lambda2);

// The objective of predicting `predicted` with consistency `s_self` when the
// reference answer is `target`.
double ScorePrediction(const temporal::TimePoint& predicted, double s_self,
                       const temporal::TimePoint& target, const ObjectiveWeights& weights);

}  // namespace horizon::inference

#endif  // HORIZON_INFERENCE_OBJECTIVE_H_
