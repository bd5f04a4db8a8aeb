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

#ifndef HORIZON_EVAL_RERANK_H_
#define HORIZON_EVAL_RERANK_H_

#include <span>
#include <string>
#include <vector>

#include "horizon/signal/features.h"

namespace horizon::eval {

// score = grade + recent * w_recency
//         + f_exp * w_f + cross_rel * w_rel + cross_auth * w_auth.
// `recent` is the control ranker's recency-window flag; the expiry terms are
// added on top of it, so all-zero expiry features reproduce the control
// ordering. With every factor in [0, 1] the feature part stays below 1 as
// long as the weights sum below 1, so a higher grade always wins, and
// w_f > w_recency puts f_exp = 1 above f_exp = 0 within a grade.
struct RerankWeights {
  double f_exp = 0.5;
  double cross_rel = 0.2;
  double cross_auth = 0.2;
  double recency = 0.05;
};

struct RankItem {
  std::string docid;
  int grade = 0;
  int recent = 0;
  signal::FeatureVector features;
};

// Throws Error(kInvalidArgument) unless f_exp > recency >= 0, the crosses are
// >= 0 and the four weights sum below 1.
void ValidateWeights(const RerankWeights& w);

double RerankScore(const RankItem& item, const RerankWeights& w);

// Indices of `items`, best first; equal scores keep input order.
std::vector<std::size_t> Rerank(std::span<const RankItem> items, const RerankWeights& w);

}  // namespace horizon::eval

#endif  // HORIZON_EVAL_RERANK_H_
