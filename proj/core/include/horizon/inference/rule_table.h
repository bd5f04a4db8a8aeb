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

#ifndef HORIZON_INFERENCE_RULE_TABLE_H_
#define HORIZON_INFERENCE_RULE_TABLE_H_

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "horizon/extraction/chunking.h"
#include "horizon/temporal/time_point.h"

namespace horizon::inference {

enum class ValidityKind {
  kFixed,      // valid for validity_days after the event
  kEventDate,  // valid until the event itself
  kPeriodic,   // valid for one period, chosen by a lexicon term
};

struct EventClass {
  std::string name;
  ValidityKind kind = ValidityKind::kFixed;
  int validity_days = 0;
  std::vector<std::string> keywords;
  // Periodic classes: lexicon term -> period length in days.
  std::vector<std::pair<std::string, int>> periods;
};

// The event class chosen for one query and its validity period.
struct EventProfile {
  std::string event_class;
  int validity_days = 0;
};

// What one chunk says about the expiration horizon.
struct ChunkReading {
  // Latest event time at or before the search time.
  std::optional<temporal::TimePoint> latest_start;
  // Date following an explicit "valid until" style phrase.
  std::optional<temporal::TimePoint> explicit_expiry;
  // Day after which content about the current state counts as fresh:
  // max(latest_start - 1 day, latest validity end not after the search time),
  // where an explicit expiry replaces the class-derived ends.
  temporal::TimePoint horizon = temporal::TimePoint::Year(1970);
};

// Deterministic event-class rules standing in for a reasoning model. Loaded
// from configuration; see docs/file_formats.md.
class RuleTable {
 public:
  static RuleTable Default();
  static RuleTable FromJsonText(std::string_view text);
  static RuleTable LoadFile(const std::string& path);
  std::string ToJsonText() const;

  // First class (in table order) with a keyword among the query tokens;
  // otherwise the class with most keyword hits in the evidence; otherwise
  // the default class.
  EventProfile Profile(std::span<const std::string> query_tokens,
                       std::span<const std::string> evidence_tokens) const;

  std::optional<ChunkReading> Read(const extraction::FocusedChunk& chunk,
                                   const EventProfile& profile,
                                   const temporal::TimePoint& search_time) const;

  const std::vector<EventClass>& classes() const { return classes_; }
  const std::vector<std::string>& explicit_phrases() const { return explicit_phrases_; }
  const EventClass* Find(std::string_view name) const;

 private:
  std::vector<EventClass> classes_;
  EventClass default_class_;
  std::vector<std::string> explicit_phrases_;
};

}  // namespace horizon::inference

#endif  // HORIZON_INFERENCE_RULE_TABLE_H_
