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

#include <fstream>
#include <sstream>

#include "horizon/common/error.h"
#include "horizon/temporal/parser.h"
#include "json.hpp"

namespace horizon::temporal {
namespace {

using nlohmann::json;

// Shipped defaults. config/parser_patterns.json is a copy of this document.
constexpr const char* kDefaultConfig = R"json({
  "ambiguous_order": "ymd",
  "two_digit_year_pivot": 2000,
  "min_year": 1900,
  "max_year": 2099,
  "patterns": [
    {"name": "iso_date", "regex": "\\b(\\d{4})[-/.](\\d{1,2})[-/.](\\d{1,2})\\b",
     "fields": {"year": 1, "month": 2, "day": 3}},
    {"name": "month_day_year", "regex": "\\b({MONTH})\\.?\\s+(\\d{1,2})(?:st|nd|rd|th)?,?\\s+(\\d{4})\\b",
     "fields": {"month_name": 1, "day": 2, "year": 3}},
    {"name": "day_month_year", "regex": "\\b(\\d{1,2})(?:st|nd|rd|th)?\\s+(?:of\\s+)?({MONTH})\\.?,?\\s+(\\d{4})\\b",
     "fields": {"day": 1, "month_name": 2, "year": 3}},
    {"name": "numeric_ambiguous", "regex": "\\b(\\d{1,2})[/.](\\d{1,2})[/.](\\d{4}|\\d{2})\\b",
     "fields": {"ambiguous": [1, 2, 3]}},
    {"name": "year_quarter", "regex": "\\b(\\d{4})[-\\s]?Q([1-4])\\b",
     "fields": {"year": 1, "quarter": 2}},
    {"name": "quarter_year", "regex": "\\bQ([1-4])[-\\s]?(\\d{4})\\b",
     "fields": {"quarter": 1, "year": 2}},
    {"name": "quarter_words", "regex": "\\b(first|second|third|fourth)\\s+quarter\\s+(?:of\\s+)?(\\d{4})\\b",
     "fields": {"quarter_word": 1, "year": 2}},
    {"name": "iso_month", "regex": "\\b(\\d{4})-(\\d{1,2})\\b",
     "fields": {"year": 1, "month": 2}},
    {"name": "month_year", "regex": "\\b({MONTH})\\.?,?\\s+(?:of\\s+)?(\\d{4})\\b",
     "fields": {"month_name": 1, "year": 2}},
    {"name": "year", "regex": "\\b(\\d{4})\\b",
     "fields": {"year": 1}}
  ],
  "relative": [
    {"name": "today", "regex": "\\btoday\\b", "unit": "day", "offset": 0},
    {"name": "yesterday", "regex": "\\byesterday\\b", "unit": "day", "offset": -1},
    {"name": "tomorrow", "regex": "\\btomorrow\\b", "unit": "day", "offset": 1},
    {"name": "days_ago", "regex": "\\b(\\d+|{COUNT})\\s+days?\\s+ago\\b", "unit": "day", "offset": -1, "count_group": 1},
    {"name": "in_days", "regex": "\\bin\\s+(\\d+|{COUNT})\\s+days?\\b", "unit": "day", "offset": 1, "count_group": 1},
    {"name": "weeks_ago", "regex": "\\b(\\d+|{COUNT})\\s+weeks?\\s+ago\\b", "unit": "week", "offset": -1, "count_group": 1},
    {"name": "last_week", "regex": "\\blast\\s+week\\b", "unit": "week", "offset": -1},
    {"name": "next_week", "regex": "\\bnext\\s+week\\b", "unit": "week", "offset": 1},
    {"name": "months_ago", "regex": "\\b(\\d+|{COUNT})\\s+months?\\s+ago\\b", "unit": "month", "offset": -1, "count_group": 1},
    {"name": "last_month", "regex": "\\blast\\s+month\\b", "unit": "month", "offset": -1},
    {"name": "this_month", "regex": "\\bthis\\s+month\\b", "unit": "month", "offset": 0},
    {"name": "next_month", "regex": "\\bnext\\s+month\\b", "unit": "month", "offset": 1},
    {"name": "last_quarter", "regex": "\\blast\\s+quarter\\b", "unit": "quarter", "offset": -1},
    {"name": "this_quarter", "regex": "\\bthis\\s+quarter\\b", "unit": "quarter", "offset": 0},
    {"name": "years_ago", "regex": "\\b(\\d+|{COUNT})\\s+years?\\s+ago\\b", "unit": "year", "offset": -1, "count_group": 1},
    {"name": "last_year", "regex": "\\blast\\s+year\\b", "unit": "year", "offset": -1},
    {"name": "this_year", "regex": "\\bthis\\s+year\\b", "unit": "year", "offset": 0},
    {"name": "next_year", "regex": "\\bnext\\s+year\\b", "unit": "year", "offset": 1}
  ]
})json";

AmbiguousOrder OrderFromString(const std::string& s) {
  if (s == "ymd") return AmbiguousOrder::kYmd;
  if (s == "mdy") return AmbiguousOrder::kMdy;
  if (s == "dmy") return AmbiguousOrder::kDmy;
  throw Error(ErrorCode::kDataError, "unknown ambiguous_order: " + s);
}

const char* OrderToString(AmbiguousOrder o) {
  switch (o) {
    case AmbiguousOrder::kYmd: return "ymd";
    case AmbiguousOrder::kMdy: return "mdy";
    case AmbiguousOrder::kDmy: return "dmy";
  }
  return "ymd";
}

RelativeUnit UnitFromString(const std::string& s) {
  if (s == "day") return RelativeUnit::kDay;
  if (s == "week") return RelativeUnit::kWeek;
  if (s == "month") return RelativeUnit::kMonth;
  if (s == "quarter") return RelativeUnit::kQuarter;
  if (s == "year") return RelativeUnit::kYear;
  throw Error(ErrorCode::kDataError, "unknown relative unit: " + s);
}

const char* UnitToString(RelativeUnit u) {
  switch (u) {
    case RelativeUnit::kDay: return "day";
    case RelativeUnit::kWeek: return "week";
    case RelativeUnit::kMonth: return "month";
    case RelativeUnit::kQuarter: return "quarter";
    case RelativeUnit::kYear: return "year";
  }
  return "day";
}

void RejectUnknownKeys(const json& obj, std::initializer_list<const char*> allowed,
                       const std::string& where) {
  for (const auto& [key, _] : obj.items()) {
    bool ok = false;
    for (const char* a : allowed) ok = ok || key == a;
    if (!ok) throw Error(ErrorCode::kDataError, where + ": unknown key '" + key + "'");
  }
}

FieldGroups FieldsFromJson(const json& j) {
  RejectUnknownKeys(j, {"year", "quarter", "quarter_word", "month", "month_name", "day", "ambiguous"},
                    "pattern fields");
  FieldGroups f;
  f.year = j.value("year", 0);
  f.quarter = j.value("quarter", 0);
  f.quarter_word = j.value("quarter_word", 0);
  f.month = j.value("month", 0);
  f.month_name = j.value("month_name", 0);
  f.day = j.value("day", 0);
  if (j.contains("ambiguous")) {
    const auto& a = j.at("ambiguous");
    if (!a.is_array() || a.size() != 3) {
      throw Error(ErrorCode::kDataError, "pattern fields: 'ambiguous' needs three groups");
    }
    for (int i = 0; i < 3; ++i) f.ambiguous[i] = a[i].get<int>();
  }
  return f;
}

json FieldsToJson(const FieldGroups& f) {
  json j = json::object();
  if (f.year) j["year"] = f.year;
  if (f.quarter) j["quarter"] = f.quarter;
  if (f.quarter_word) j["quarter_word"] = f.quarter_word;
  if (f.month) j["month"] = f.month;
  if (f.month_name) j["month_name"] = f.month_name;
  if (f.day) j["day"] = f.day;
  if (f.ambiguous[0]) j["ambiguous"] = {f.ambiguous[0], f.ambiguous[1], f.ambiguous[2]};
  return j;
}

}  // namespace

ParserConfig ParserConfig::Default() { return FromJsonText(kDefaultConfig); }

ParserConfig ParserConfig::FromJsonText(std::string_view text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kDataError, std::string("parser config: ") + e.what());
  }
  try {
    RejectUnknownKeys(root,
                      {"ambiguous_order", "two_digit_year_pivot", "min_year", "max_year",
                       "patterns", "relative"},
                      "parser config");
    ParserConfig cfg;
    cfg.ambiguous_order = OrderFromString(root.value("ambiguous_order", std::string("ymd")));
    cfg.two_digit_year_pivot = root.value("two_digit_year_pivot", 2000);
    cfg.min_year = root.value("min_year", 1900);
    cfg.max_year = root.value("max_year", 2099);
    for (const auto& p : root.value("patterns", json::array())) {
      RejectUnknownKeys(p, {"name", "regex", "fields"}, "pattern");
      cfg.patterns.push_back(AbsolutePattern{p.at("name").get<std::string>(),
                                             p.at("regex").get<std::string>(),
                                             FieldsFromJson(p.at("fields"))});
    }
    for (const auto& r : root.value("relative", json::array())) {
      RejectUnknownKeys(r, {"name", "regex", "unit", "offset", "count_group"}, "relative rule");
      RelativeRule rule;
      rule.name = r.at("name").get<std::string>();
      rule.regex = r.at("regex").get<std::string>();
      rule.unit = UnitFromString(r.at("unit").get<std::string>());
      rule.offset = r.value("offset", 0);
      rule.count_group = r.value("count_group", 0);
      cfg.relative.push_back(std::move(rule));
    }
    return cfg;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kDataError, std::string("parser config: ") + e.what());
  }
}

ParserConfig ParserConfig::LoadFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot open parser config: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return FromJsonText(ss.str());
}

std::string ParserConfig::ToJsonText() const {
  json root;
  root["ambiguous_order"] = OrderToString(ambiguous_order);
  root["two_digit_year_pivot"] = two_digit_year_pivot;
  root["min_year"] = min_year;
  root["max_year"] = max_year;
  root["patterns"] = json::array();
  for (const auto& p : patterns) {
    root["patterns"].push_back({{"name", p.name}, {"regex", p.regex}, {"fields", FieldsToJson(p.fields)}});
  }
  root["relative"] = json::array();
  for (const auto& r : relative) {
    json j = {{"name", r.name}, {"regex", r.regex}, {"unit", UnitToString(r.unit)}, {"offset", r.offset}};
    if (r.count_group) j["count_group"] = r.count_group;
    root["relative"].push_back(std::move(j));
  }
  return root.dump(2);
}

}  // namespace horizon::temporal
