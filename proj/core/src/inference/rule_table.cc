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

#include "horizon/inference/rule_table.h"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

#include "horizon/common/error.h"
#include "json.hpp"

namespace horizon::inference {
namespace {

using nlohmann::json;
using temporal::TimePoint;

// config/oracle_rules.json serializes the same table (key order and layout differ).
constexpr const char* kDefaultRules = R"json({
  "default_class": {"name": "general", "kind": "fixed", "validity_days": 30},
  "classes": [
    {"name": "periodic", "kind": "periodic", "validity_days": 7,
     "keywords": ["weekly", "monthly", "quarterly", "annual", "annually", "yearly"],
     "periods": {"weekly": 7, "monthly": 30, "quarterly": 91, "annual": 365, "annually": 365, "yearly": 365}},
    {"name": "sports_fixture", "kind": "fixed", "validity_days": 1,
     "keywords": ["match", "fixture", "derby", "kickoff", "tournament", "game"]},
    {"name": "scheduled_event", "kind": "event_date", "validity_days": 0,
     "keywords": ["concert", "conference", "expo", "exhibition", "festival", "summit", "ceremony", "launch"]},
    {"name": "breaking_news", "kind": "fixed", "validity_days": 3,
     "keywords": ["fire", "blaze", "explosion", "accident", "crash", "shooting", "protest", "outage", "evacuation", "breaking"]},
    {"name": "disaster", "kind": "fixed", "validity_days": 3,
     "keywords": ["earthquake", "flood", "flooding", "typhoon", "hurricane", "landslide", "storm", "wildfire", "tsunami"]},
    {"name": "policy", "kind": "fixed", "validity_days": 3650,
     "keywords": ["policy", "regulation", "regulations", "law", "laws", "act", "rule", "rules", "statute", "ordinance", "tax", "code"]}
  ],
  "explicit_expiry_phrases": ["valid until", "valid through", "expires on", "expire on", "expiring on", "effective until", "in force until"]
})json";

ValidityKind KindFromString(const std::string& s) {
  if (s == "fixed") return ValidityKind::kFixed;
  if (s == "event_date") return ValidityKind::kEventDate;
  if (s == "periodic") return ValidityKind::kPeriodic;
  throw Error(ErrorCode::kDataError, "unknown validity kind: " + s);
}

const char* KindToString(ValidityKind k) {
  switch (k) {
    case ValidityKind::kFixed: return "fixed";
    case ValidityKind::kEventDate: return "event_date";
    case ValidityKind::kPeriodic: return "periodic";
  }
  return "fixed";
}

void RejectUnknownKeys(const json& obj, std::initializer_list<const char*> allowed,
                       const std::string& where) {
  for (const auto& [key, _] : obj.items()) {
    if (std::none_of(allowed.begin(), allowed.end(), [&](const char* a) { return key == a; })) {
      throw Error(ErrorCode::kDataError, where + ": unknown key '" + key + "'");
    }
  }
}

EventClass ClassFromJson(const json& j) {
  RejectUnknownKeys(j, {"name", "kind", "validity_days", "keywords", "periods"}, "rule class");
  EventClass c;
  c.name = j.at("name").get<std::string>();
  c.kind = KindFromString(j.value("kind", std::string("fixed")));
  c.validity_days = j.value("validity_days", 0);
  if (c.validity_days < 0) throw Error(ErrorCode::kDataError, c.name + ": negative validity");
  c.keywords = j.value("keywords", std::vector<std::string>{});
  if (j.contains("periods")) {
    for (const auto& [term, days] : j.at("periods").items()) {
      c.periods.emplace_back(term, days.get<int>());
    }
  }
  return c;
}

json ClassToJson(const EventClass& c) {
  json j = {{"name", c.name}, {"kind", KindToString(c.kind)}, {"validity_days", c.validity_days}};
  if (!c.keywords.empty()) j["keywords"] = c.keywords;
  if (!c.periods.empty()) {
    json p = json::object();
    for (const auto& [term, days] : c.periods) p[term] = days;
    j["periods"] = p;
  }
  return j;
}

bool HasToken(std::span<const std::string> tokens, const std::string& word) {
  return std::find(tokens.begin(), tokens.end(), word) != tokens.end();
}

std::string Lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

bool Later(const TimePoint& a, const TimePoint& b) { return temporal::DaysBetween(b, a) > 0; }

}  // namespace

RuleTable RuleTable::Default() { return FromJsonText(kDefaultRules); }

RuleTable RuleTable::FromJsonText(std::string_view text) {
  try {
    json root = json::parse(text);
    RejectUnknownKeys(root, {"default_class", "classes", "explicit_expiry_phrases"}, "rule table");
    RuleTable t;
    t.default_class_ = ClassFromJson(root.at("default_class"));
    for (const auto& c : root.at("classes")) t.classes_.push_back(ClassFromJson(c));
    for (const auto& p : root.value("explicit_expiry_phrases", std::vector<std::string>{})) {
      t.explicit_phrases_.push_back(Lower(p));
    }
    return t;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kDataError, std::string("rule table: ") + e.what());
  }
}

RuleTable RuleTable::LoadFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot open rule table: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return FromJsonText(ss.str());
}

std::string RuleTable::ToJsonText() const {
  json root;
  root["default_class"] = ClassToJson(default_class_);
  root["classes"] = json::array();
  for (const auto& c : classes_) root["classes"].push_back(ClassToJson(c));
  root["explicit_expiry_phrases"] = explicit_phrases_;
  return root.dump(2);
}

const EventClass* RuleTable::Find(std::string_view name) const {
  if (name == default_class_.name) return &default_class_;
  for (const auto& c : classes_) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

EventProfile RuleTable::Profile(std::span<const std::string> query_tokens,
                                std::span<const std::string> evidence_tokens) const {
  const EventClass* chosen = nullptr;
  for (const auto& c : classes_) {
    if (std::any_of(c.keywords.begin(), c.keywords.end(),
                    [&](const std::string& k) { return HasToken(query_tokens, k); })) {
      chosen = &c;
      break;
    }
  }
  if (!chosen) {
    std::size_t best_hits = 0;
    for (const auto& c : classes_) {
      std::size_t hits = 0;
      for (const auto& t : evidence_tokens) hits += HasToken(c.keywords, t) ? 1 : 0;
      if (hits > best_hits) {
        best_hits = hits;
        chosen = &c;
      }
    }
  }
  if (!chosen) chosen = &default_class_;

  EventProfile profile{chosen->name, chosen->validity_days};
  switch (chosen->kind) {
    case ValidityKind::kEventDate: profile.validity_days = 0; break;
    case ValidityKind::kPeriodic: {
      bool found = false;
      for (auto tokens : {query_tokens, evidence_tokens}) {
        for (const auto& t : tokens) {
          auto it = std::find_if(chosen->periods.begin(), chosen->periods.end(),
                                 [&](const auto& p) { return p.first == t; });
          if (it != chosen->periods.end()) {
            profile.validity_days = it->second;
            found = true;
            break;
          }
        }
        if (found) break;
      }
      break;
    }
    case ValidityKind::kFixed: break;
  }
  return profile;
}

std::optional<ChunkReading> RuleTable::Read(const extraction::FocusedChunk& chunk,
                                            const EventProfile& profile,
                                            const TimePoint& search_time) const {
  // Explicit expiry: first mention after a phrase in the same sentence.
  std::vector<bool> is_explicit(chunk.mentions.size(), false);
  std::optional<TimePoint> explicit_expiry;
  for (std::size_t s = 0; s < chunk.sentences.size(); ++s) {
    const std::size_t sentence_index = chunk.start + s;
    const std::string lower = Lower(chunk.sentences[s]);
    for (const auto& phrase : explicit_phrases_) {
      std::size_t pos = lower.find(phrase);
      if (pos == std::string::npos) continue;
      const std::size_t after = pos + phrase.size();
      std::optional<std::size_t> pick;
      for (std::size_t i = 0; i < chunk.mentions.size(); ++i) {
        const auto& m = chunk.mentions[i];
        if (m.sentence_index != sentence_index || m.offset < after) continue;
        if (!pick || m.offset < chunk.mentions[*pick].offset) pick = i;
      }
      if (!pick) continue;
      is_explicit[*pick] = true;
      const TimePoint& t = chunk.mentions[*pick].normalized;
      if (!explicit_expiry || Later(t, *explicit_expiry)) explicit_expiry = t;
    }
  }

  std::vector<TimePoint> starts;
  for (std::size_t i = 0; i < chunk.mentions.size(); ++i) {
    const TimePoint& t = chunk.mentions[i].normalized;
    if (!is_explicit[i] && !Later(t, search_time)) starts.push_back(t);
  }
  if (starts.empty() && explicit_expiry && chunk.pub_time && !Later(*chunk.pub_time, search_time)) {
    starts.push_back(*chunk.pub_time);
  }
  if (starts.empty() && !explicit_expiry) return std::nullopt;

  ChunkReading reading;
  reading.explicit_expiry = explicit_expiry;
  std::vector<TimePoint> ends;
  if (explicit_expiry) {
    ends.push_back(*explicit_expiry);
  } else {
    for (const auto& s : starts) ends.push_back(temporal::AddDays(s, profile.validity_days));
  }

  std::optional<TimePoint> horizon;
  auto consider = [&](const TimePoint& t) {
    if (!horizon || Later(t, *horizon)) horizon = t;
  };
  if (!starts.empty()) {
    TimePoint latest = starts.front();
    for (const auto& s : starts) {
      if (Later(s, latest)) latest = s;
    }
    reading.latest_start = latest;
    consider(temporal::AddDays(latest, -1));
  }
  for (const auto& e : ends) {
    if (!Later(e, search_time)) consider(temporal::TimePoint::FromDays(e.midpoint()));
  }
  if (!horizon) return std::nullopt;
  reading.horizon = *horizon;
  return reading;
}

}  // namespace horizon::inference
