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

#ifndef HORIZON_SIGNAL_FEATURES_H_
#define HORIZON_SIGNAL_FEATURES_H_

#include <string>
#include <string_view>

#include "horizon/extraction/document.h"
#include "horizon/signal/signal.h"

namespace horizon::signal {

// Ranking features for one (query, document) pair. The two crosses are the
// products of f_exp with relevance and with authority.
struct FeatureVector {
  int f_exp = 0;
  double s_rel_doc = 0.0;
  double authority = 0.0;
  double cross_rel = 0.0;
  double cross_auth = 0.0;
  double age_days = 0.0;

  bool operator==(const FeatureVector&) const = default;
};

FeatureVector EmitFeatures(const ExpirySignal& signal, const extraction::Document& doc,
                           double s_rel_doc, const temporal::TimePoint& doc_time,
                           const temporal::TimePoint& search_time);

// {"f_exp":1,"s_rel_doc":0.7,"authority":0.5,"cross_rel":0.7,
//  "cross_auth":0.5,"age_days":3}
std::string FeaturesToJson(const FeatureVector& f);
// Throws Error(kDataError) on missing, unknown or non-finite fields and on
// crosses that are not the products of their factors.
FeatureVector FeaturesFromJson(std::string_view text);

}  // namespace horizon::signal

#endif  // HORIZON_SIGNAL_FEATURES_H_
