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

#include "horizon/eval/generator.h"

#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "horizon/common/error.h"

namespace horizon::eval {
namespace {

using extraction::Document;
using temporal::TimePoint;

// Calendar days since the epoch. All story arithmetic runs on these.
using Day = long;

TimePoint ToPoint(Day d) {
  return TimePoint::FromDays(std::chrono::sys_days(std::chrono::days(d)));
}
Day ToDay(const TimePoint& t) { return t.midpoint().time_since_epoch().count(); }

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  // Inclusive range; modulo bias is irrelevant at these widths.
  long Uniform(long lo, long hi) {
    return lo + static_cast<long>(engine_() % static_cast<std::uint64_t>(hi - lo + 1));
  }
  template <typename T>
  const T& Pick(const std::vector<T>& v) {
    return v[static_cast<std::size_t>(Uniform(0, static_cast<long>(v.size()) - 1))];
  }
  template <typename T>
  void Shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::swap(v[i - 1], v[static_cast<std::size_t>(Uniform(0, static_cast<long>(i) - 1))]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

const char* const kMonths[] = {"January", "February", "March",     "April",   "May",      "June",
                               "July",    "August",   "September", "October", "November", "December"};

std::string FormatDate(Day d, Rng& rng) {
  const TimePoint t = ToPoint(d);
  switch (rng.Uniform(0, 2)) {
    case 0: return t.ToString();
    case 1:
      return std::string(kMonths[t.month() - 1]) + " " + std::to_string(t.day()) + ", " +
             std::to_string(t.year());
    default:
      return std::to_string(t.day()) + " " + kMonths[t.month() - 1] + " " +
             std::to_string(t.year());
  }
}

std::string Capitalize(std::string s) {
  if (!s.empty() && s[0] >= 'a' && s[0] <= 'z') s[0] = static_cast<char>(s[0] - 'a' + 'A');
  return s;
}

std::string PlaceName(Rng& rng) {
  static const std::vector<std::string> kHead = {"bar", "ken", "dal", "mor", "ash", "bel",
                                                 "cas", "nor", "wex", "tul", "hal", "gar",
                                                 "fen", "lor", "pem", "rud", "sel", "vard"};
  static const std::vector<std::string> kTail = {"ford", "wick", "holm", "ton", "mere", "by",
                                                 "stead", "ridge", "moor", "brook", "haven",
                                                 "field", "dale", "port"};
  return rng.Pick(kHead) + rng.Pick(kTail);
}

int ValidityOf(const inference::RuleTable& rules, const std::string& cls, int fallback) {
  const auto* c = rules.Find(cls);
  return c ? c->validity_days : fallback;
}

int PeriodOf(const inference::RuleTable& rules, const std::string& term, int fallback) {
  const auto* c = rules.Find("periodic");
  if (!c) return fallback;
  for (const auto& [t, days] : c->periods) {
    if (t == term) return days;
  }
  return fallback;
}

// A document draft before ids, grades and labels are attached.
struct Draft {
  std::string title;
  std::vector<std::string> sentences;
  Day pub = 0;
  double authority = 0.5;
  std::string source;
};

struct Story {
  std::string text;
  FreshnessTier tier = FreshnessTier::kNone;
  std::vector<PlantedEvent> events;
  std::vector<Draft> drafts;
};

double Authority(Rng& rng) { return static_cast<double>(rng.Uniform(30, 100)) / 100.0; }

// Builds a body: the dated lead sentence first, then `extra` filler lines.
std::vector<std::string> Body(std::string lead, const std::vector<std::string>& filler, int extra,
                              Rng& rng) {
  std::vector<std::string> pool = filler;
  rng.Shuffle(pool);
  std::vector<std::string> out{std::move(lead)};
  for (int i = 0; i < extra && i < static_cast<int>(pool.size()); ++i) out.push_back(pool[i]);
  return out;
}

Story BreakingStory(Rng& rng, const std::string& place, Day s, bool disaster, int validity,
                    int n) {
  static const std::vector<std::string> kNews = {"fire", "blaze", "explosion", "outage", "crash"};
  static const std::vector<std::string> kDisaster = {"flood", "earthquake", "wildfire",
                                                     "landslide", "storm"};
  static const std::vector<std::string> kSites = {"warehouse", "market", "tower", "depot",
                                                  "harbor", "factory"};
  static const std::vector<std::string> kRegions = {"valley", "district", "coast", "county",
                                                    "hills"};
  const std::string noun = rng.Pick(disaster ? kDisaster : kNews);
  const std::string site = rng.Pick(disaster ? kRegions : kSites);
  const std::string subject = place + " " + site;

  Story st;
  st.text = subject + " " + noun;
  st.tier = FreshnessTier::kWeek;
  const Day e = s - rng.Uniform(0, 5);
  const Day p1 = e - rng.Uniform(8, 25);
  const Day p2 = p1 - rng.Uniform(60, 400);
  for (Day d : {e, p1, p2}) st.events.push_back({ToPoint(d), validity, std::nullopt});

  const std::vector<std::string> filler = {
      "Crews in " + Capitalize(subject) + " worked through the night after the " + noun + ".",
      "Residents near the " + subject + " were asked to avoid the " + noun + " area.",
      "Officials said the " + subject + " " + noun + " is under investigation.",
      "Volunteers in the " + subject + " helped families affected by the " + noun + ".",
      "Roads around the " + subject + " reopened slowly after the " + noun + ".",
  };
  auto report = [&](Day event, Day pub) {
    Draft d;
    d.pub = pub;
    std::string lead;
    if (pub == event + 1 && rng.Uniform(0, 1) == 0) {
      lead = "The " + noun + " in the " + subject + " began yesterday.";
    } else {
      lead = "The " + noun + " in the " + subject + " began on " + FormatDate(event, rng) + ".";
    }
    d.title = Capitalize(subject) + " " + noun + " report";
    d.sentences = Body(std::move(lead), filler, 2, rng);
    d.authority = Authority(rng);
    d.source = "news";
    return d;
  };
  const int fresh = n * 7 / 20;
  const int recent = n * 7 / 20;
  for (int i = 0; i < fresh; ++i) st.drafts.push_back(report(e, rng.Uniform(e, s)));
  for (int i = 0; i < recent; ++i) st.drafts.push_back(report(p1, rng.Uniform(p1, e - 1)));
  while (static_cast<int>(st.drafts.size()) < n) {
    st.drafts.push_back(report(p2, p2 + rng.Uniform(0, 10)));
  }
  return st;
}

Story SportsStory(Rng& rng, const std::string& place, Day s, int validity, int n) {
  static const std::vector<std::string> kTeams = {"rovers", "united", "wanderers", "athletic",
                                                  "rangers"};
  static const std::vector<std::string> kKinds = {"derby", "match", "fixture"};
  const std::string team = place + " " + rng.Pick(kTeams);
  const std::string kind = rng.Pick(kKinds);
  Story st;
  st.text = team + " " + kind;
  st.tier = FreshnessTier::kWeek;
  const Day f0 = s - rng.Uniform(0, 6);
  const std::vector<std::string> filler = {
      "Supporters of " + Capitalize(team) + " filled the stands for the " + kind + ".",
      "The " + team + " coach praised the squad after the " + kind + ".",
      "Tickets for every " + team + " " + kind + " sold quickly.",
      "Analysts expect the " + team + " " + kind + " rivalry to stay close.",
  };
  for (int k = 0; k < 4; ++k) {
    const Day f = f0 - 7 * k;
    st.events.push_back({ToPoint(f), validity, std::nullopt});
    for (int i = 0; i < n / 5; ++i) {
      Draft d;
      d.pub = std::min(s, f + rng.Uniform(0, 1));
      d.title = Capitalize(team) + " " + kind + " result";
      d.sentences = Body("The " + team + " " + kind + " was played on " + FormatDate(f, rng) + ".",
                         filler, 2, rng);
      d.authority = Authority(rng);
      d.source = "sports";
      st.drafts.push_back(std::move(d));
    }
  }
  while (static_cast<int>(st.drafts.size()) < n) {
    Draft d;
    d.pub = rng.Uniform(f0, s);
    d.title = Capitalize(team) + " " + kind + " preview";
    d.sentences = Body("The next " + team + " " + kind + " is set for " +
                           FormatDate(f0 + 7, rng) + ".",
                       filler, 2, rng);
    d.authority = Authority(rng);
    d.source = "sports";
    st.drafts.push_back(std::move(d));
  }
  return st;
}

Story ScheduledStory(Rng& rng, const std::string& place, Day s, int validity, int n) {
  static const std::vector<std::string> kEvents = {"festival", "concert", "conference", "expo",
                                                   "summit"};
  const std::string ev = place + " " + rng.Pick(kEvents);
  Story st;
  st.text = ev;
  st.tier = FreshnessTier::kMonth;
  const std::vector<std::string> filler = {
      "Organizers of the " + ev + " expect large crowds.",
      "Local hotels near the " + ev + " venue report strong bookings.",
      "The " + ev + " program lists many speakers and performers.",
      "Volunteers are still needed for the " + ev + ".",
  };
  const bool future = rng.Uniform(0, 9) < 6;
  std::vector<Day> updates;
  Day f = 0;
  if (future) {
    f = s + rng.Uniform(5, 60);
    const Day a1 = s - rng.Uniform(60, 150);
    const Day a2 = a1 + rng.Uniform(10, 40);
    const Day a3 = std::max(a2 + 1, s - rng.Uniform(0, 20));
    updates = {a1, a2, a3};
  } else {
    f = s - rng.Uniform(1, 25);
    const Day a1 = f - rng.Uniform(60, 150);
    const Day a2 = f - rng.Uniform(10, 50);
    updates = {a1, a2, f};
  }
  for (Day u : updates) st.events.push_back({ToPoint(u), validity, std::nullopt});
  for (int i = 0; static_cast<int>(st.drafts.size()) < n; ++i) {
    const Day u = updates[static_cast<std::size_t>(i) % updates.size()];
    Draft d;
    if (u == f) {
      d.pub = rng.Uniform(f, s);
      d.title = Capitalize(ev) + " recap";
      d.sentences = Body("The " + ev + " took place on " + FormatDate(f, rng) + ".", filler, 2, rng);
    } else {
      d.pub = std::min(s, u + rng.Uniform(0, 2));
      d.title = Capitalize(ev) + " announcement";
      d.sentences = Body("Organizers announced on " + FormatDate(u, rng) + " that the " + ev +
                             " will be held on " + FormatDate(f, rng) + ".",
                         filler, 2, rng);
    }
    d.authority = Authority(rng);
    d.source = "events";
    st.drafts.push_back(std::move(d));
  }
  return st;
}

Story PeriodicStory(Rng& rng, const std::string& place, Day s, int period, int n) {
  static const std::vector<std::string> kReports = {"jobs report", "price bulletin",
                                                    "ridership summary", "housing survey"};
  const std::string report = place + " monthly " + rng.Pick(kReports);
  Story st;
  st.text = report;
  st.tier = FreshnessTier::kMonth;
  const std::vector<std::string> filler = {
      "Economists follow the " + report + " closely.",
      "The " + report + " compares figures with earlier editions.",
      "Council members discussed the " + report + " at length.",
  };
  const Day r0 = s - rng.Uniform(0, 29);
  for (int k = 0; k < 4; ++k) {
    const Day r = r0 - 30 * k;
    st.events.push_back({ToPoint(r), period, std::nullopt});
    for (int i = 0; i < n / 4 + (k < n % 4 ? 1 : 0); ++i) {
      Draft d;
      d.pub = std::min(s, r + rng.Uniform(0, 3));
      d.title = Capitalize(report);
      d.sentences =
          Body("The " + report + " was released on " + FormatDate(r, rng) + ".", filler, 2, rng);
      d.authority = Authority(rng);
      d.source = "statistics";
      st.drafts.push_back(std::move(d));
    }
  }
  return st;
}

Story PolicyStory(Rng& rng, const std::string& place, Day s, int validity, bool amended, int n) {
  static const std::vector<std::string> kPolicies = {"parking regulations", "noise ordinance",
                                                     "zoning law", "recycling policy",
                                                     "rental regulations"};
  const std::string policy = place + " " + rng.Pick(kPolicies);
  Story st;
  st.text = policy;
  st.tier = FreshnessTier::kNone;
  const std::vector<std::string> filler = {
      "Residents can read the " + policy + " online.",
      "Lawyers explained how the " + policy + " affects households.",
      "The " + policy + " applies across the whole city.",
      "Businesses adjusted their plans to the " + policy + ".",
  };
  const Day p = s - rng.Uniform(400, 2500);
  st.events.push_back({ToPoint(p), validity, std::nullopt});
  auto add = [&](Day pub, std::string lead, const std::string& title, double authority) {
    Draft d;
    d.pub = pub;
    d.title = title;
    d.sentences = Body(std::move(lead), filler, 2, rng);
    d.authority = authority;
    d.source = "government";
    st.drafts.push_back(std::move(d));
  };
  for (int i = 0; i < 3; ++i) {
    const Day draft = p - rng.Uniform(60, 400);
    st.events.push_back({ToPoint(draft), validity, std::nullopt});
    add(draft, "A draft of the " + policy + " was proposed on " + FormatDate(draft, rng) + ".",
        Capitalize(policy) + " draft", Authority(rng));
  }
  add(p - rng.Uniform(0, 10), "The " + policy + " takes effect on " + FormatDate(p, rng) + ".",
      Capitalize(policy), 0.95);
  Day amend = 0;
  if (amended) {
    amend = s - rng.Uniform(40, 300);
    st.events.push_back({ToPoint(amend), validity, std::nullopt});
  }
  while (static_cast<int>(st.drafts.size()) < n) {
    if (amended && rng.Uniform(0, 1) == 0) {
      add(rng.Uniform(amend, s),
          "The " + policy + " was amended on " + FormatDate(amend, rng) + ".",
          Capitalize(policy) + " amendment", Authority(rng));
    } else {
      const Day hi = amended ? amend - 1 : s;
      add(rng.Uniform(p, hi), "Under the " + policy + " in effect since " + FormatDate(p, rng) +
                                  ", permits are required.",
          Capitalize(policy) + " guide", Authority(rng));
    }
  }
  return st;
}

Story LongTailStory(Rng& rng, const std::string& place, Day s, int validity, int n) {
  static const std::vector<std::string> kTopics = {"library renovation", "bridge repairs",
                                                   "ferry timetable", "park cleanup",
                                                   "museum wing"};
  const std::string topic = place + " " + rng.Pick(kTopics);
  Story st;
  st.text = topic;
  st.tier = FreshnessTier::kNone;
  const std::vector<std::string> filler = {
      "Neighbors shared opinions about the " + topic + ".",
      "The " + topic + " budget was reviewed by the council.",
      "Photos of the " + topic + " drew attention online.",
  };
  const Day e0 = s - rng.Uniform(0, 200);
  const Day e1 = e0 - rng.Uniform(30, 300);
  const Day e2 = e1 - rng.Uniform(30, 300);
  const std::vector<Day> events = {e0, e1, e2};
  for (Day e : events) st.events.push_back({ToPoint(e), validity, std::nullopt});
  for (int i = 0; static_cast<int>(st.drafts.size()) < n; ++i) {
    const Day e = events[static_cast<std::size_t>(i) % events.size()];
    Draft d;
    d.pub = std::min(s, e + rng.Uniform(0, 20));
    d.title = Capitalize(topic) + " update";
    d.sentences = Body("Work on the " + topic + " was reported on " + FormatDate(e, rng) + ".",
                       filler, 2, rng);
    d.authority = Authority(rng);
    d.source = "local";
    st.drafts.push_back(std::move(d));
  }
  return st;
}

}  // namespace

std::optional<TimePoint> PlantedHorizon(std::span<const PlantedEvent> events,
                                        const TimePoint& search_time) {
  const Day s = ToDay(search_time);
  std::optional<Day> best;
  auto consider = [&](Day d) { best = best ? std::max(*best, d) : d; };
  for (const auto& e : events) {
    const Day start = ToDay(e.start);
    if (start > s) continue;
    consider(start - 1);
    const Day end = e.explicit_expiry ? ToDay(*e.explicit_expiry) : start + e.validity_days;
    if (end <= s) consider(end);
  }
  if (!best) return std::nullopt;
  return ToPoint(*best);
}

Corpus GenerateCorpus(const GeneratorParams& params, const inference::RuleTable& rules) {
  if (params.num_queries < 0 || params.docs_per_query < 5 || params.search_span_days < 1) {
    throw Error(ErrorCode::kInvalidArgument, "invalid generator parameters");
  }
  Rng rng(params.seed);
  const int news = ValidityOf(rules, "breaking_news", 3);
  const int disaster = ValidityOf(rules, "disaster", 3);
  const int sports = ValidityOf(rules, "sports_fixture", 1);
  const int scheduled = 0;  // event-date classes expire with the event itself
  const int monthly = PeriodOf(rules, "monthly", 30);
  const int policy = ValidityOf(rules, "policy", 3650);
  const int general = ValidityOf(rules, "general", 30);

  Corpus corpus;
  std::set<std::string> texts;
  const Day first = ToDay(params.first_search_day);
  const int n = params.docs_per_query;
  for (int qi = 0; qi < params.num_queries; ++qi) {
    const Day s = first + rng.Uniform(0, params.search_span_days - 1);
    const long shape = rng.Uniform(0, 99);
    Story st;
    std::string place;
    for (int attempt = 0;; ++attempt) {
      place = PlaceName(rng);
      if (shape < 20) {
        st = BreakingStory(rng, place, s, false, news, n);
      } else if (shape < 30) {
        st = BreakingStory(rng, place, s, true, disaster, n);
      } else if (shape < 45) {
        st = SportsStory(rng, place, s, sports, n);
      } else if (shape < 55) {
        st = ScheduledStory(rng, place, s, scheduled, n);
      } else if (shape < 65) {
        st = PeriodicStory(rng, place, s, monthly, n);
      } else if (shape < 75) {
        st = PolicyStory(rng, place, s, policy, false, n);
      } else if (shape < 85) {
        st = PolicyStory(rng, place, s, policy, true, n);
      } else {
        st = LongTailStory(rng, place, s, general, n);
      }
      if (texts.insert(st.text).second) break;
      if (attempt > 1000) throw Error(ErrorCode::kInvalidArgument, "cannot find unique queries");
    }

    char qid[16];
    std::snprintf(qid, sizeof(qid), "q%04d", qi + 1);
    EvalQuery q;
    q.qid = qid;
    q.text = st.text;
    q.search_time = ToPoint(s);
    q.tier = st.tier;
    q.gt_expiry = PlantedHorizon(st.events, q.search_time);
    rng.Shuffle(st.drafts);
    for (std::size_t di = 0; di < st.drafts.size(); ++di) {
      Draft& dr = st.drafts[di];
      Document d;
      char docid[32];
      std::snprintf(docid, sizeof(docid), "%s-d%02zu", qid, di + 1);
      d.docid = docid;
      d.title = std::move(dr.title);
      d.sentences = std::move(dr.sentences);
      d.pub_time = ToPoint(dr.pub);
      d.authority = dr.authority;
      d.source = std::move(dr.source);
      const int grade = static_cast<int>(rng.Uniform(0, 4));
      const int label = q.gt_expiry && dr.pub > ToDay(*q.gt_expiry) ? 2 : 0;
      q.candidates.push_back({d.docid, grade, label});
      corpus.documents.push_back(std::move(d));
    }
    corpus.queries.push_back(std::move(q));
  }
  return corpus;
}

}  // namespace horizon::eval
