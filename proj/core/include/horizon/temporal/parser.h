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

#ifndef HORIZON_TEMPORAL_PARSER_H_
#define HORIZON_TEMPORAL_PARSER_H_

#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "horizon/temporal/time_point.h"

namespace horizon::temporal {

// How to read a numeric date whose field order cannot be inferred from the
// digit counts alone ("03/04/25").
enum class AmbiguousOrder { kYmd, kMdy, kDmy };

// Which capture group carries which calendar field. Zero means absent.
struct FieldGroups {
  int year = 0;
  int quarter = 0;
  int quarter_word = 0;  // "first" .. "fourth"
  int month = 0;
  int month_name = 0;
  int day = 0;
  // Numeric triple whose order is resolved via AmbiguousOrder.
  int ambiguous[3] = {0, 0, 0};
};

struct AbsolutePattern {
  std::string name;
  // Perl-syntax regular expression, matched case-insensitively.
  // "{MONTH}" expands to an alternation of English month names and "{COUNT}"
  // to the number words one..twelve.
  std::string regex;
  FieldGroups fields;
};

enum class RelativeUnit { kDay, kWeek, kMonth, kQuarter, kYear };

// A relative expression such as "yesterday" or "3 weeks ago". The resolved
// point is reference + offset * count units, at day resolution for day and
// week units and at the unit's own resolution otherwise.
struct RelativeRule {
  std::string name;
  std::string regex;
  RelativeUnit unit = RelativeUnit::kDay;
  int offset = 0;
  // Capture group holding a count ("3" or "three"); 0 means a count of 1.
  int count_group = 0;
};

struct ParserConfig {
  AmbiguousOrder ambiguous_order = AmbiguousOrder::kYmd;
  // Two-digit years map to pivot + yy.
  int two_digit_year_pivot = 2000;
  int min_year = 1900;
  int max_year = 2099;
  // Matched in order; earlier patterns claim text before later ones.
  std::vector<AbsolutePattern> patterns;
  std::vector<RelativeRule> relative;

  static ParserConfig Default();
  // Schema documented in docs/parser_config.md; throws Error(kDataError).
  static ParserConfig FromJsonText(std::string_view text);
  static ParserConfig LoadFile(const std::string& path);
  std::string ToJsonText() const;
};

struct TemporalMention {
  std::string surface;
  TimePoint normalized;
  std::size_t sentence_index = 0;
  // Byte offset of `surface` inside its sentence.
  std::size_t offset = 0;
  bool is_relative = false;
};

// Recognizes absolute dates, year/quarter/month expressions and a closed
// set of relative expressions. Immutable after construction and safe to share
// across threads.
class TemporalParser {
 public:
  explicit TemporalParser(ParserConfig config = ParserConfig::Default());
  ~TemporalParser();
  TemporalParser(TemporalParser&&) noexcept;
  TemporalParser& operator=(TemporalParser&&) noexcept;

  // `reference` must be day-level; relative expressions resolve against it.
  // Mentions are ordered by sentence, then by offset.
  std::vector<TemporalMention> Parse(std::span<const std::string> sentences,
                                     const TimePoint& reference) const;

  std::vector<TemporalMention> ParseSentence(std::string_view sentence,
                                             std::size_t sentence_index,
                                             const TimePoint& reference) const;

  const ParserConfig& config() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace horizon::temporal

#endif  // HORIZON_TEMPORAL_PARSER_H_
