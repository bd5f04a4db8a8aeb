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

#include "horizon/signal/features.h"

#include <algorithm>
#include <cmath>

#include "horizon/common/error.h"
#include "json.hpp"

namespace horizon::signal {

FeatureVector EmitFeatures(const ExpirySignal& signal, const extraction::Document& doc,
                           double s_rel_doc, const temporal::TimePoint& doc_time,
                           const temporal::TimePoint& search_time) {
  FeatureVector f;
  f.f_exp = signal.f_exp;
  f.s_rel_doc = s_rel_doc;
  f.authority = doc.authority;
  f.cross_rel = f.f_exp * f.s_rel_doc;
  f.cross_auth = f.f_exp * f.authority;
  f.age_days = temporal::ElapsedDays(doc_time, search_time);
  return f;
}

std::string FeaturesToJson(const FeatureVector& f) {
  nlohmann::ordered_json j;
  j["f_exp"] = f.f_exp;
  j["s_rel_doc"] = f.s_rel_doc;
  j["authority"] = f.authority;
  j["cross_rel"] = f.cross_rel;
  j["cross_auth"] = f.cross_auth;
  j["age_days"] = f.age_days;
  return j.dump();
}

FeatureVector FeaturesFromJson(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kDataError, std::string("features: ") + e.what());
  }
  static const char* kKeys[] = {"f_exp", "s_rel_doc", "authority", "cross_rel", "cross_auth",
                                "age_days"};
  if (!j.is_object()) throw Error(ErrorCode::kDataError, "features: expected an object");
  for (const auto& [key, _] : j.items()) {
    if (std::none_of(std::begin(kKeys), std::end(kKeys), [&](const char* k) { return key == k; })) {
      throw Error(ErrorCode::kDataError, "features: unknown key '" + key + "'");
    }
  }
  auto number = [&](const char* key) {
    if (!j.contains(key) || !j[key].is_number()) {
      throw Error(ErrorCode::kDataError, std::string("features: missing number '") + key + "'");
    }
    const double v = j[key].get<double>();
    if (!std::isfinite(v)) throw Error(ErrorCode::kDataError, std::string("features: ") + key);
    return v;
  };
  FeatureVector f;
  const double flag = number("f_exp");
  if (flag != 0.0 && flag != 1.0) throw Error(ErrorCode::kDataError, "features: f_exp not 0/1");
  f.f_exp = static_cast<int>(flag);
  f.s_rel_doc = number("s_rel_doc");
  f.authority = number("authority");
  f.cross_rel = number("cross_rel");
  f.cross_auth = number("cross_auth");
  f.age_days = number("age_days");
  if (f.cross_rel != f.f_exp * f.s_rel_doc || f.cross_auth != f.f_exp * f.authority) {
    throw Error(ErrorCode::kDataError, "features: crosses disagree with their factors");
  }
  return f;
}

}  // namespace horizon::signal
