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

#include "horizon/eval/rerank.h"

#include <algorithm>
#include <numeric>

#include "horizon/common/error.h"

namespace horizon::eval {

void ValidateWeights(const RerankWeights& w) {
  if (w.recency < 0.0 || !(w.f_exp > w.recency) || w.cross_rel < 0.0 || w.cross_auth < 0.0 ||
      !(w.f_exp + w.cross_rel + w.cross_auth + w.recency < 1.0)) {
    throw Error(ErrorCode::kInvalidArgument,
                "rerank weights need f_exp > recency >= 0, crosses >= 0 and a sum below 1");
  }
}

double RerankScore(const RankItem& item, const RerankWeights& w) {
  const auto& f = item.features;
  return item.grade + w.recency * item.recent + w.f_exp * f.f_exp + w.cross_rel * f.cross_rel + w.cross_auth * f.cross_auth;
}

std::vector<std::size_t> Rerank(std::span<const RankItem> items, const RerankWeights& w) {
  std::vector<double> scores;
  scores.reserve(items.size());
  for (const auto& it : items) scores.push_back(RerankScore(it, w));
  std::vector<std::size_t> order(items.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return scores[a] > scores[b]; });
  return order;
}

}  // namespace horizon::eval
