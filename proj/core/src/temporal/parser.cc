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

#include "horizon/temporal/parser.h"

#include <algorithm>
#include <array>
#include <boost/regex.hpp>
#include <cctype>
#include <optional>
#include <spdlog/spdlog.h>

#include "horizon/common/error.h"

namespace horizon::temporal {
namespace {

constexpr std::string_view kMonthAlternation =
    "january|february|march|april|may|june|july|august|september|october|november|"
    "december|jan|feb|mar|apr|jun|jul|aug|sept|sep|oct|nov|dec";
constexpr std::string_view kCountAlternation =
    "one|two|three|four|five|six|seven|eight|nine|ten|eleven|twelve";

constexpr std::array<std::string_view, 12> kNumberWords = {
    "one", "two", "three", "four", "five", "six", "seven", "eight", "nine", "ten", "eleven", "twelve"};

std::string Lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

std::string Expand(std::string regex) {
  for (auto [token, alt] : {std::pair{std::string_view("{MONTH}"), kMonthAlternation},
                            std::pair{std::string_view("{COUNT}"), kCountAlternation}}) {
    std::size_t pos;
    while ((pos = regex.find(token)) != std::string::npos) {
      regex.replace(pos, token.size(), alt);
    }
  }
  return regex;
}

boost::regex Compile(const std::string& name, const std::string& pattern) {
  try {
    return boost::regex(Expand(pattern), boost::regex::perl | boost::regex::icase);
  } catch (const boost::regex_error& e) {
    throw Error(ErrorCode::kDataError, "bad regex for '" + name + "': " + e.what());
  }
}

std::optional<int> MonthFromName(std::string_view name) {
  std::string n = Lower(name);
  static constexpr std::array<std::string_view, 12> kPrefixes = {
      "jan", "feb", "mar", "apr", "may", "jun", "jul", "aug", "sep", "oct", "nov", "dec"};
  for (int i = 0; i < 12; ++i) {
    if (n.compare(0, 3, kPrefixes[i]) == 0) return i + 1;
  }
  return std::nullopt;
}

std::optional<int> ToInt(const std::string& s) {
  if (s.empty() || s.size() > 6) return std::nullopt;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
  }
  return std::stoi(s);
}

std::optional<int> CountValue(const std::string& s) {
  if (auto n = ToInt(s)) return n;
  std::string l = Lower(s);
  for (std::size_t i = 0; i < kNumberWords.size(); ++i) {
    if (l == kNumberWords[i]) return static_cast<int>(i) + 1;
  }
  return std::nullopt;
}

std::optional<int> QuarterFromWord(const std::string& s) {
  std::string l = Lower(s);
  if (l == "first") return 1;
  if (l == "second") return 2;
  if (l == "third") return 3;
  if (l == "fourth") return 4;
  return std::nullopt;
}

struct Span {
  std::size_t begin;
  std::size_t end;
};

bool Overlaps(const std::vector<Span>& claimed, Span s) {
  return std::any_of(claimed.begin(), claimed.end(),
                     [&](const Span& c) { return s.begin < c.end && c.begin < s.end; });
}

}  // namespace

struct TemporalParser::Impl {
  ParserConfig config;
  std::vector<boost::regex> absolute;
  std::vector<boost::regex> relative;

  std::optional<int> Year(const std::string& digits) const {
    auto y = ToInt(digits);
    if (!y) return std::nullopt;
    if (digits.size() == 2) *y += config.two_digit_year_pivot;
    if (*y < config.min_year || *y > config.max_year) return std::nullopt;
    return y;
  }

  std::optional<TimePoint> TryDay(int y, int m, int d) const {
    try {
      return TimePoint::Day(y, m, d);
    } catch (const Error&) {
      return std::nullopt;
    }
  }

  std::optional<TimePoint> ResolveAmbiguous(const std::string& a, const std::string& b,
                                            const std::string& c) const {
    auto ia = ToInt(a);
    auto ib = ToInt(b);
    if (!ia || !ib) return std::nullopt;
    // Candidate readings in preference order.
    std::vector<std::optional<TimePoint>> readings;
    if (c.size() == 4) {
      auto y = Year(c);
      if (!y) return std::nullopt;
      auto mdy = TryDay(*y, *ia, *ib);
      auto dmy = TryDay(*y, *ib, *ia);
      if (config.ambiguous_order == AmbiguousOrder::kDmy) {
        readings = {dmy, mdy};
      } else {
        readings = {mdy, dmy};
      }
    } else {
      auto ic = ToInt(c);
      if (!ic) return std::nullopt;
      auto ymd = [&]() -> std::optional<TimePoint> {
        auto y = Year(a);
        return y ? TryDay(*y, *ib, *ic) : std::nullopt;
      }();
      auto mdy = [&]() -> std::optional<TimePoint> {
        auto y = Year(c);
        return y ? TryDay(*y, *ia, *ib) : std::nullopt;
      }();
      auto dmy = [&]() -> std::optional<TimePoint> {
        auto y = Year(c);
        return y ? TryDay(*y, *ib, *ia) : std::nullopt;
      }();
      switch (config.ambiguous_order) {
        case AmbiguousOrder::kYmd: readings = {ymd, mdy, dmy}; break;
        case AmbiguousOrder::kMdy: readings = {mdy, dmy, ymd}; break;
        case AmbiguousOrder::kDmy: readings = {dmy, mdy, ymd}; break;
      }
    }
    std::optional<TimePoint> chosen;
    int valid = 0;
    for (const auto& r : readings) {
      if (!r) continue;
      if (!chosen) chosen = r;
      if (*r != *chosen) ++valid;
    }
    if (chosen && valid > 0) {
      spdlog::debug("ambiguous date {}/{}/{} resolved to {}", a, b, c, chosen->ToString());
    }
    return chosen;
  }

  std::optional<TimePoint> Normalize(const AbsolutePattern& p, const boost::smatch& m) const {
    auto group = [&](int g) { return g > 0 && m[g].matched ? m[g].str() : std::string(); };
    const FieldGroups& f = p.fields;
    if (f.ambiguous[0]) {
      return ResolveAmbiguous(group(f.ambiguous[0]), group(f.ambiguous[1]), group(f.ambiguous[2]));
    }
    auto y = Year(group(f.year));
    if (!y) return std::nullopt;
    try {
      if (f.quarter || f.quarter_word) {
        auto q = f.quarter ? ToInt(group(f.quarter)) : QuarterFromWord(group(f.quarter_word));
        if (!q) return std::nullopt;
        return TimePoint::Quarter(*y, *q);
      }
      std::optional<int> month;
      if (f.month) month = ToInt(group(f.month));
      if (f.month_name) month = MonthFromName(group(f.month_name));
      if (!f.month && !f.month_name) return TimePoint::Year(*y);
      if (!month) return std::nullopt;
      if (!f.day) return TimePoint::Month(*y, *month);
      auto d = ToInt(group(f.day));
      if (!d) return std::nullopt;
      return TimePoint::Day(*y, *month, *d);
    } catch (const Error&) {
      return std::nullopt;
    }
  }

  std::optional<TimePoint> Resolve(const RelativeRule& r, const boost::smatch& m,
                                   const TimePoint& ref) const {
    int count = 1;
    if (r.count_group > 0) {
      auto c = m[r.count_group].matched ? CountValue(m[r.count_group].str()) : std::nullopt;
      if (!c) return std::nullopt;
      count = *c;
    }
    long shift = static_cast<long>(r.offset) * count;
    try {
      switch (r.unit) {
        case RelativeUnit::kDay: return AddDays(ref, shift);
        case RelativeUnit::kWeek: return AddDays(ref, shift * 7);
        case RelativeUnit::kMonth: {
          long months = ref.year() * 12L + (ref.month() - 1) + shift;
          return TimePoint::Month(static_cast<int>(months / 12), static_cast<int>(months % 12) + 1);
        }
        case RelativeUnit::kQuarter: {
          long quarters = ref.year() * 4L + (ref.month() - 1) / 3 + shift;
          return TimePoint::Quarter(static_cast<int>(quarters / 4),
                                    static_cast<int>(quarters % 4) + 1);
        }
        case RelativeUnit::kYear: return TimePoint::Year(ref.year() + static_cast<int>(shift));
      }
    } catch (const Error&) {
    }
    return std::nullopt;
  }
};

TemporalParser::TemporalParser(ParserConfig config) : impl_(std::make_unique<Impl>()) {
  impl_->config = std::move(config);
  for (const auto& p : impl_->config.patterns) impl_->absolute.push_back(Compile(p.name, p.regex));
  for (const auto& r : impl_->config.relative) impl_->relative.push_back(Compile(r.name, r.regex));
}

TemporalParser::~TemporalParser() = default;
TemporalParser::TemporalParser(TemporalParser&&) noexcept = default;
TemporalParser& TemporalParser::operator=(TemporalParser&&) noexcept = default;

const ParserConfig& TemporalParser::config() const { return impl_->config; }

std::vector<TemporalMention> TemporalParser::ParseSentence(std::string_view sentence,
                                                           std::size_t sentence_index,
                                                           const TimePoint& reference) const {
  if (reference.depth() != 3) {
    throw Error(ErrorCode::kInvalidArgument, "reference time must be a full date");
  }
  const std::string text(sentence);
  std::vector<TemporalMention> out;
  std::vector<Span> claimed;

  auto scan = [&](const boost::regex& re, auto&& normalize, bool relative) {
    for (boost::sregex_iterator it(text.begin(), text.end(), re), end; it != end; ++it) {
      const boost::smatch& m = *it;
      Span span{static_cast<std::size_t>(m.position(std::size_t{0})),
                static_cast<std::size_t>(m.position(std::size_t{0}) + m.length(std::size_t{0}))};
      if (Overlaps(claimed, span)) continue;
      // A matched span is claimed even when it does not normalize, so that
      // "2025-02-30" is not re-read as the bare year 2025.
      claimed.push_back(span);
      std::optional<TimePoint> t = normalize(m);
      if (!t) {
        spdlog::debug("skipping unrecognized temporal expression '{}'", m.str(0));
        continue;
      }
      out.push_back(TemporalMention{m.str(0), *t, sentence_index, span.begin, relative});
    }
  };

  for (std::size_t i = 0; i < impl_->absolute.size(); ++i) {
    const AbsolutePattern& p = impl_->config.patterns[i];
    scan(impl_->absolute[i], [&](const boost::smatch& m) { return impl_->Normalize(p, m); }, false);
  }
  for (std::size_t i = 0; i < impl_->relative.size(); ++i) {
    const RelativeRule& r = impl_->config.relative[i];
    scan(impl_->relative[i], [&](const boost::smatch& m) { return impl_->Resolve(r, m, reference); },
         true);
  }
  std::sort(out.begin(), out.end(),
            [](const TemporalMention& a, const TemporalMention& b) { return a.offset < b.offset; });
  return out;
}

std::vector<TemporalMention> TemporalParser::Parse(std::span<const std::string> sentences,
                                                   const TimePoint& reference) const {
  std::vector<TemporalMention> out;
  for (std::size_t i = 0; i < sentences.size(); ++i) {
    auto mentions = ParseSentence(sentences[i], i, reference);
    out.insert(out.end(), std::make_move_iterator(mentions.begin()),
               std::make_move_iterator(mentions.end()));
  }
  return out;
}

}  // namespace horizon::temporal
