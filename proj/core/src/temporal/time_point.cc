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

#include "horizon/temporal/time_point.h"

#include <algorithm>
#include <charconv>
#include <cstdio>

#include "horizon/common/error.h"

namespace horizon::temporal {
namespace {

using std::chrono::sys_days;
using std::chrono::year_month_day;

constexpr int kMinYear = 1;
constexpr int kMaxYear = 9999;

void CheckYear(int year) {
  if (year < kMinYear || year > kMaxYear) {
    throw Error(ErrorCode::kInvalidArgument, "year out of range: " + std::to_string(year));
  }
}

sys_days MakeDays(int y, int m, int d) {
  return sys_days(year_month_day(std::chrono::year(y), std::chrono::month(m),
                                 std::chrono::day(d)));
}

bool ParseInt(std::string_view s, int& out) {
  if (s.empty()) return false;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

int QuarterOfMonth(int month) { return (month - 1) / 3 + 1; }

}  // namespace

int DaysInMonth(int year, int month) {
  auto last = std::chrono::year_month_day_last(
      std::chrono::year(year), std::chrono::month_day_last(std::chrono::month(month)));
  return static_cast<int>(static_cast<unsigned>(last.day()));
}

TimePoint TimePoint::Year(int year) {
  CheckYear(year);
  return TimePoint(Granularity::kYear, year, 0, 0, 0);
}

TimePoint TimePoint::Quarter(int year, int quarter) {
  CheckYear(year);
  if (quarter < 1 || quarter > 4) {
    throw Error(ErrorCode::kInvalidArgument, "quarter out of range: " + std::to_string(quarter));
  }
  return TimePoint(Granularity::kQuarter, year, quarter, 0, 0);
}

TimePoint TimePoint::Month(int year, int month) {
  CheckYear(year);
  if (month < 1 || month > 12) {
    throw Error(ErrorCode::kInvalidArgument, "month out of range: " + std::to_string(month));
  }
  return TimePoint(Granularity::kMonth, year, 0, month, 0);
}

TimePoint TimePoint::Day(int year, int month, int day) {
  TimePoint m = Month(year, month);
  if (day < 1 || day > DaysInMonth(year, month)) {
    throw Error(ErrorCode::kInvalidArgument,
                "invalid calendar day " + std::to_string(year) + "-" + std::to_string(month) +
                    "-" + std::to_string(day));
  }
  return TimePoint(Granularity::kDay, m.year_, 0, month, day);
}

TimePoint TimePoint::FromDays(sys_days days) {
  year_month_day ymd(days);
  return Day(static_cast<int>(ymd.year()), static_cast<int>(static_cast<unsigned>(ymd.month())),
             static_cast<int>(static_cast<unsigned>(ymd.day())));
}

std::optional<TimePoint> TimePoint::Parse(std::string_view text) {
  try {
    int y = 0;
    if (text.size() == 4) {
      if (!ParseInt(text, y)) return std::nullopt;
      return Year(y);
    }
    if (text.size() < 7 || text[4] != '-' || !ParseInt(text.substr(0, 4), y)) {
      return std::nullopt;
    }
    std::string_view rest = text.substr(5);
    if (rest.size() == 2 && (rest[0] == 'Q' || rest[0] == 'q')) {
      int q = 0;
      if (!ParseInt(rest.substr(1), q)) return std::nullopt;
      return Quarter(y, q);
    }
    if (rest.size() == 2) {
      int m = 0;
      if (!ParseInt(rest, m)) return std::nullopt;
      return Month(y, m);
    }
    if (rest.size() == 5 && rest[2] == '-') {
      int m = 0;
      int d = 0;
      if (!ParseInt(rest.substr(0, 2), m) || !ParseInt(rest.substr(3), d)) return std::nullopt;
      return Day(y, m, d);
    }
  } catch (const Error&) {
  }
  return std::nullopt;
}

int TimePoint::depth() const {
  switch (granularity_) {
    case Granularity::kYear: return 1;
    case Granularity::kQuarter:
    case Granularity::kMonth: return 2;
    case Granularity::kDay: return 3;
  }
  return 1;
}

sys_days TimePoint::first_day() const {
  switch (granularity_) {
    case Granularity::kYear: return MakeDays(year_, 1, 1);
    case Granularity::kQuarter: return MakeDays(year_, (quarter_ - 1) * 3 + 1, 1);
    case Granularity::kMonth: return MakeDays(year_, month_, 1);
    case Granularity::kDay: return MakeDays(year_, month_, day_);
  }
  return MakeDays(year_, 1, 1);
}

sys_days TimePoint::last_day() const {
  switch (granularity_) {
    case Granularity::kYear: return MakeDays(year_, 12, 31);
    case Granularity::kQuarter: {
      int m = quarter_ * 3;
      return MakeDays(year_, m, DaysInMonth(year_, m));
    }
    case Granularity::kMonth: return MakeDays(year_, month_, DaysInMonth(year_, month_));
    case Granularity::kDay: return first_day();
  }
  return first_day();
}

sys_days TimePoint::midpoint() const {
  sys_days first = first_day();
  auto span = (last_day() - first).count();  // n - 1
  return first + std::chrono::days(span / 2);
}

std::string TimePoint::ToString() const {
  char buf[16];
  switch (granularity_) {
    case Granularity::kYear: std::snprintf(buf, sizeof(buf), "%04d", year_); break;
    case Granularity::kQuarter: std::snprintf(buf, sizeof(buf), "%04d-Q%d", year_, quarter_); break;
    case Granularity::kMonth: std::snprintf(buf, sizeof(buf), "%04d-%02d", year_, month_); break;
    case Granularity::kDay:
      std::snprintf(buf, sizeof(buf), "%04d-%02d-%02d", year_, month_, day_);
      break;
  }
  return buf;
}

std::strong_ordering TimePoint::operator<=>(const TimePoint& other) const {
  if (auto c = first_day() <=> other.first_day(); c != 0) return c;
  if (auto c = last_day() <=> other.last_day(); c != 0) return c;
  return static_cast<int>(granularity_) <=> static_cast<int>(other.granularity_);
}

std::ostream& operator<<(std::ostream& os, const TimePoint& t) { return os << t.ToString(); }

int GranularityDepth(const TimePoint& t) { return t.depth(); }

int HierarchicalMatchDepth(const TimePoint& a, const TimePoint& b) {
  if (a.year() != b.year()) return 0;
  if (a.depth() < 2 || b.depth() < 2) return 1;

  bool level2 = false;
  if (a.granularity() == Granularity::kQuarter && b.granularity() == Granularity::kQuarter) {
    level2 = a.quarter() == b.quarter();
  } else if (a.granularity() == Granularity::kQuarter) {
    level2 = QuarterOfMonth(b.month()) == a.quarter();
  } else if (b.granularity() == Granularity::kQuarter) {
    level2 = QuarterOfMonth(a.month()) == b.quarter();
  } else {
    level2 = a.month() == b.month();
  }
  if (!level2) return 1;
  if (a.depth() < 3 || b.depth() < 3) return 2;
  return a.day() == b.day() ? 3 : 2;
}

bool Aligned(const TimePoint& a, const TimePoint& b) {
  return HierarchicalMatchDepth(a, b) == std::min(a.depth(), b.depth());
}

std::weak_ordering ChronoCompare(const TimePoint& a, const TimePoint& b) {
  if (Aligned(a, b)) return std::weak_ordering::equivalent;
  return a.first_day() < b.first_day() ? std::weak_ordering::less : std::weak_ordering::greater;
}

long DaysBetween(const TimePoint& a, const TimePoint& b) {
  return static_cast<long>((b.midpoint() - a.midpoint()).count());
}

double ElapsedDays(const TimePoint& t, const TimePoint& reference) {
  long d = DaysBetween(t, reference);
  return d > 0 ? static_cast<double>(d) : 0.0;
}

TimePoint AddDays(const TimePoint& t, long days) {
  return TimePoint::FromDays(t.midpoint() + std::chrono::days(days));
}

}  // namespace horizon::temporal
