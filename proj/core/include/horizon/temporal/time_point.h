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

#ifndef HORIZON_TEMPORAL_TIME_POINT_H_
#define HORIZON_TEMPORAL_TIME_POINT_H_

#include <chrono>
#include <compare>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

namespace horizon::temporal {

enum class Granularity { kYear, kQuarter, kMonth, kDay };

// A calendar point at year, quarter, month or day resolution. Every
// TimePoint covers a contiguous span of calendar days; coarse points cover
// more than one day.
class TimePoint {
 public:
  // Factories validate their arguments and throw Error(kInvalidArgument).
  static TimePoint Year(int year);
  static TimePoint Quarter(int year, int quarter);
  static TimePoint Month(int year, int month);
  static TimePoint Day(int year, int month, int day);
  static TimePoint FromDays(std::chrono::sys_days days);

  // Parses the canonical rendering produced by ToString():
  // "2025", "2025-Q3", "2025-03", "2025-03-15".
  static std::optional<TimePoint> Parse(std::string_view text);

  int year() const { return year_; }
  Granularity granularity() const { return granularity_; }
  // 0 unless the point is quarter-level.
  int quarter() const { return quarter_; }
  // 0 unless the point is month- or day-level.
  int month() const { return month_; }
  // 0 unless the point is day-level.
  int day() const { return day_; }

  // Hierarchical depth: year = 1, quarter or month = 2, day = 3.
  int depth() const;

  std::chrono::sys_days first_day() const;
  std::chrono::sys_days last_day() const;
  // Middle calendar day of the span: first + (n - 1) / 2 for an n-day span.
  std::chrono::sys_days midpoint() const;

  std::string ToString() const;

  bool operator==(const TimePoint&) const = default;

  // Total order used for containers and tie-breaks: earlier span start
  // first, then shorter span, then granularity.
  std::strong_ordering operator<=>(const TimePoint& other) const;

 private:
  TimePoint(Granularity g, int year, int quarter, int month, int day)
      : granularity_(g), year_(year), quarter_(quarter), month_(month), day_(day) {}

  Granularity granularity_ = Granularity::kYear;
  int year_ = 0;
  int quarter_ = 0;
  int month_ = 0;
  int day_ = 0;
};

std::ostream& operator<<(std::ostream& os, const TimePoint& t);

int GranularityDepth(const TimePoint& t);

// Number of leading hierarchy levels on which `a` and `b` agree. A quarter
// and a month agree at level 2 iff the month lies inside the quarter.
int HierarchicalMatchDepth(const TimePoint& a, const TimePoint& b);

// True iff one point contains the other or they are equal, i.e. their match
// depth reaches the shallower of the two depths.
bool Aligned(const TimePoint& a, const TimePoint& b);

// Chronological comparison with span semantics: points whose spans are
// hierarchically nested compare equivalent; otherwise span starts decide.
std::weak_ordering ChronoCompare(const TimePoint& a, const TimePoint& b);

// Days from the midpoint of `t` to `reference` (a day-level point), clamped
// at zero for points after the reference.
double ElapsedDays(const TimePoint& t, const TimePoint& reference);

// Signed day difference between midpoints, b - a.
long DaysBetween(const TimePoint& a, const TimePoint& b);

// Day-level point `days` after the midpoint of `t`.
TimePoint AddDays(const TimePoint& t, long days);

// Number of days in a month, accounting for leap years.
int DaysInMonth(int year, int month);

}  // namespace horizon::temporal

#endif  // HORIZON_TEMPORAL_TIME_POINT_H_
