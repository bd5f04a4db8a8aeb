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

#include <atomic>
#include <chrono>
#include <random>
#include <sstream>
#include <thread>

#include <gtest/gtest.h>
#include <httplib.h>
#include <nlohmann/json.hpp>

#include "horizon/common/clock.h"
#include "horizon/common/error.h"
#include "horizon/extraction/extractor.h"
#include "horizon/inference/engine.h"
#include "horizon/inference/objective.h"
#include "horizon/inference/oracle_backend.h"
#include "horizon/inference/prompt.h"
#include "horizon/inference/remote_backend.h"
#include "horizon/inference/response_schema.h"
#include "horizon/inference/rule_table.h"
#include "oracles.h"
#include "test_util.h"

namespace horizon::inference {
namespace {

using horizon::testing::Day;
using horizon::testing::MakeDoc;
using temporal::TimePoint;

struct Scenario {
  extraction::QueryAnchor anchor;
  extraction::FocusedChunkSet focus;
  TimePoint search_time = TimePoint::Year(1970);
};

Scenario Extract(const char* query, std::vector<extraction::Document> docs, const char* search) {
  auto extractor = horizon::testing::DefaultExtractor();
  Scenario s;
  s.search_time = Day(search);
  s.anchor = extractor->Anchor(query, s.search_time);
  std::vector<const extraction::Document*> ptrs;
  for (const auto& d : docs) ptrs.push_back(&d);
  s.focus = extractor->Extract(s.anchor, ptrs, s.search_time).focus;
  return s;
}

std::shared_ptr<const RuleTable> Rules() {
  static auto rules = std::make_shared<const RuleTable>(RuleTable::Default());
  return rules;
}

InferenceOutcome RunOracle(const Scenario& s) {
  OracleBackend backend(Rules());
  ManualClock clock;
  Deadline deadline(clock, Millis(1000));
  return ForwardBackward(backend, s.anchor, s.focus, s.search_time, {}, "", deadline);
}

Scenario FireScenario(const char* search = "2025-06-02") {
  return Extract("hong kong fire",
                 {MakeDoc("fire", "Tower fire", {"The fire was extinguished on 2025-05-30."},
                          "2025-05-30", 0.9)},
                 search);
}

// ---- prompts -------------------------------------------------------------

TEST(PromptTest, ForwardStructure) {
  auto s = Extract("hong kong fire",
                   {MakeDoc("a", "Fire", {"The fire was extinguished on 2025-05-30."}, "2025-05-30"),
                    MakeDoc("b", "Fire", {"Hong Kong fire crews left on 2025-05-31."}, "2025-05-31")},
                   "2025-06-02");
  ASSERT_EQ(s.focus.chunks.size(), 2u);
  auto p = BuildPrompt(s.anchor, s.focus, s.search_time, {}, "", PromptMode::kForward);
  const std::string text = p.Render();
  auto count = [&](const std::string& needle) {
    std::size_t n = 0;
    for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
    return n;
  };
  EXPECT_EQ(count("[chunk "), 2u);
  EXPECT_EQ(count("Search time: "), 1u);
  EXPECT_EQ(count("Search time: 2025-06-02\n"), 1u);
  EXPECT_EQ(count("Candidate: "), 0u);
  EXPECT_EQ(text, BuildPrompt(s.anchor, s.focus, s.search_time, {}, "", PromptMode::kForward).Render());
}

TEST(PromptTest, BackwardCarriesCandidateAtItsGranularity) {
  auto s = FireScenario();
  auto p = BuildPrompt(s.anchor, s.focus, s.search_time, {}, "", PromptMode::kBackward,
                       TimePoint::Month(2025, 6));
  EXPECT_NE(p.Render().find("Candidate: 2025-06\n"), std::string::npos);
  EXPECT_THROW(BuildPrompt(s.anchor, s.focus, s.search_time, {}, "", PromptMode::kBackward), Error);
}

TEST(PromptTest, EmptyFocusIsNoEvidence) {
  auto s = FireScenario();
  s.focus.chunks.clear();
  try {
    BuildPrompt(s.anchor, s.focus, s.search_time, {}, "", PromptMode::kForward);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNoEvidence);
  }
}

TEST(PromptTest, ExemplarSelectionPrefersDomain) {
  std::vector<Exemplar> ex = {{"general", "g1", {"c"}, "r", "2025-01-01"},
                              {"policy", "p1", {"c"}, "r", "2025-01-01"},
                              {"breaking_news", "b1", {"c"}, "r", "2025-01-01"},
                              {"general", "g2", {"c"}, "r", "2025-01-01"}};
  auto s = FireScenario();
  auto p = BuildPrompt(s.anchor, s.focus, s.search_time, ex, "breaking_news", PromptMode::kForward);
  ASSERT_EQ(p.few_shot.size(), kMaxExemplars);
  EXPECT_EQ(p.few_shot[0].query, "b1");
  EXPECT_EQ(p.few_shot[1].query, "g1");
}

TEST(ExemplarTest, ShippedFileLoads) {
  auto ex = LoadExemplars(horizon::testing::ConfigPath("exemplars.jsonl"));
  EXPECT_GE(ex.size(), 5u);
  for (const auto& e : ex) {
    EXPECT_FALSE(e.domain.empty());
    EXPECT_TRUE(TimePoint::Parse(e.expiry).has_value()) << e.expiry;
  }
  std::stringstream bad("{\"domain\": \"x\"}\n");
  EXPECT_THROW(ReadExemplars(bad), Error);
}

// ---- response schema -----------------------------------------------------

TEST(ResponseSchemaTest, RoundTrip) {
  BackendResponse r;
  r.trajectory.steps = {{StepKind::kEvidence, "event", 1, Day("2025-05-30")},
                        {StepKind::kExpiry, "horizon", 0, TimePoint::Month(2025, 6)}};
  r.trajectory.conclusion = Day("2025-06-02");
  r.self_score = 0.75;
  r.event_class = "breaking_news";
  EXPECT_EQ(ParseResponse(SerializeResponse(r), PromptMode::kBackward, 1), r);
  r.trajectory.conclusion.reset();
  EXPECT_EQ(ParseResponse(SerializeResponse(r), PromptMode::kBackward, 1), r);
}

TEST(ResponseSchemaTest, RejectsMalformedOutput) {
  const char* bad[] = {
      "not json",
      R"({"steps": []})",
      R"({"steps": [], "conclusion": "2025-13-01"})",
      R"({"steps": [], "conclusion": "2025-06-02", "extra": 1})",
      R"({"steps": [{"kind": "guess", "claim": "", "chunk_id": 1, "time": null}], "conclusion": "2025-06-02"})",
      R"({"steps": [{"kind": "evidence", "claim": "", "chunk_id": 3, "time": null}], "conclusion": "2025-06-02"})",
      R"({"steps": [{"kind": "evidence", "claim": "", "chunk_id": -1, "time": null}], "conclusion": "2025-06-02"})",
  };
  for (const char* text : bad) {
    try {
      ParseResponse(text, PromptMode::kForward, 2);
      ADD_FAILURE() << text;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kBackendSchema) << text;
    }
  }
}

TEST(ResponseSchemaTest, SelfScoreRules) {
  const std::string base = R"({"steps": [], "conclusion": "2025-06-02")";
  EXPECT_EQ(ParseResponse(base + R"(, "self_score": 1.7})", PromptMode::kBackward, 0).self_score, 1.0);
  EXPECT_EQ(ParseResponse(base + R"(, "self_score": -2})", PromptMode::kBackward, 0).self_score, 0.0);
  EXPECT_THROW(ParseResponse(base + R"(, "self_score": "high"})", PromptMode::kBackward, 0), Error);
  EXPECT_NO_THROW(ParseResponse(base + "}", PromptMode::kForward, 0));
  EXPECT_TRUE(nlohmann::json::accept(ResponseSchemaJson()));
}

// ---- oracle backend ------------------------------------------------------

TEST(OracleTest, BreakingNewsExpiresAfterThreeDays) {
  auto out = RunOracle(FireScenario());
  EXPECT_EQ(out.event_class, "breaking_news");
  EXPECT_EQ(out.t_init, Day("2025-06-02"));
  EXPECT_EQ(out.candidates.front(), out.t_init);
  EXPECT_EQ(out.s_self, 1.0);
}

TEST(OracleTest, BeforeValidityEndsHorizonIsDayBeforeEvent) {
  auto out = RunOracle(FireScenario("2025-05-31"));
  EXPECT_EQ(out.t_init, Day("2025-05-29"));
}

TEST(OracleTest, PolicyHorizon) {
  auto docs = {MakeDoc("p", "Traffic regulations",
                       {"Traffic regulations: the new traffic regulations are effective from 2020-01-01."}, "2019-12-01")};
  // While the rule is in force, content older than its start is stale.
  EXPECT_EQ(RunOracle(Extract("traffic regulations", docs, "2025-06-01")).t_init, Day("2019-12-31"));
  // Once the 3650-day validity has run out the horizon is its end.
  const TimePoint end = temporal::AddDays(Day("2020-01-01"), 3650);
  EXPECT_EQ(end, Day("2029-12-29"));
  EXPECT_EQ(RunOracle(Extract("traffic regulations", docs, "2030-03-01")).t_init, end);
}

TEST(OracleTest, ExplicitExpiryOverridesClass) {
  auto docs = {MakeDoc("x", "Permit", {"The parking permit is valid until 2025-12-31."}, "2025-01-10")};
  auto out = RunOracle(Extract("parking permit", docs, "2026-01-15"));
  EXPECT_EQ(out.t_init, Day("2025-12-31"));
}

TEST(OracleTest, BackwardContradictionAppendsSupersedingHorizon) {
  // The most relevant chunk reports the closure; a newer chunk reports the
  // reopening, which the backward pass treats as superseding.
  auto s = Extract("hong kong fire bridge",
                   {MakeDoc("old", "Hong Kong fire bridge closed",
                            {"Hong Kong fire closed the bridge on 2025-05-20."}, "2025-05-20", 1.0),
                    MakeDoc("new", "Bridge reopened",
                            {"The bridge reopened after the fire on 2025-05-28."}, "2025-05-28", 0.4)},
                   "2025-06-02");
  ASSERT_EQ(s.focus.chunks.size(), 2u);
  ASSERT_EQ(s.focus.chunks[0].source_id, "old");
  auto out = RunOracle(s);
  EXPECT_EQ(out.t_init, Day("2025-05-23"));
  EXPECT_EQ(out.s_self, 0.0);
  EXPECT_NE(std::find(out.candidates.begin(), out.candidates.end(), Day("2025-05-31")),
            out.candidates.end());
  EXPECT_EQ(out.backward.conclusion, Day("2025-05-31"));
}

TEST(OracleTest, PartialConfirmationIsAFraction) {
  // Two sources, two different horizons that do not exceed t_init: one of
  // two evidence steps confirms the candidate.
  auto s = Extract("hong kong fire",
                   {MakeDoc("a", "Hong Kong fire", {"Hong Kong fire ended on 2025-05-30."}, "2025-05-30", 1.0),
                    MakeDoc("b", "Fire", {"An earlier fire ended on 2025-05-10."}, "2025-05-10", 1.0)},
                   "2025-06-02");
  auto out = RunOracle(s);
  EXPECT_EQ(out.t_init, Day("2025-06-02"));
  EXPECT_DOUBLE_EQ(out.s_self, 0.5);
}

TEST(OracleTest, DeterministicAcrossInstances) {
  auto s = FireScenario();
  EXPECT_EQ(RunOracle(s), RunOracle(s));
}

TEST(OracleTest, DatelessEvidenceHasNoVerdict) {
  auto s = Extract("hong kong fire", {MakeDoc("n", "Hong Kong fire", {"Crews are at the scene."}, "2025-05-30")},
                   "2025-06-02");
  // Publication time alone is not evidence of an event.
  try {
    RunOracle(s);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNoVerdict);
  }
}

TEST(OracleTest, ExpiredDeadlineIsATimeout) {
  auto s = FireScenario();
  OracleBackend backend(Rules());
  ManualClock clock;
  Deadline deadline(clock, Millis(0));
  try {
    ForwardBackward(backend, s.anchor, s.focus, s.search_time, {}, "", deadline);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kBackendTimeout);
  }
}

// ---- rule table ----------------------------------------------------------

TEST(RuleTableTest, ProfileSelection) {
  auto r = RuleTable::Default();
  using V = std::vector<std::string>;
  EXPECT_EQ(r.Profile(V{"hong", "kong", "fire"}, V{}).validity_days, 3);
  EXPECT_EQ(r.Profile(V{"cup", "final", "match"}, V{}).validity_days, 1);
  EXPECT_EQ(r.Profile(V{"traffic", "regulations"}, V{}).validity_days, 3650);
  auto sched = r.Profile(V{"jazz", "festival"}, V{});
  EXPECT_EQ(sched.event_class, "scheduled_event");
  EXPECT_EQ(sched.validity_days, 0);
  EXPECT_EQ(r.Profile(V{"weekly", "report"}, V{}).validity_days, 7);
  EXPECT_EQ(r.Profile(V{"annual", "report"}, V{}).validity_days, 365);
  EXPECT_EQ(r.Profile(V{"report"}, V{"flood", "storm", "fire"}).event_class, "disaster");
  EXPECT_EQ(r.Profile(V{"report"}, V{}).event_class, "general");
}

TEST(RuleTableTest, ShippedFileEqualsDefault) {
  auto shipped = RuleTable::LoadFile(horizon::testing::ConfigPath("oracle_rules.json"));
  EXPECT_EQ(shipped.ToJsonText(), RuleTable::Default().ToJsonText());
  EXPECT_EQ(RuleTable::FromJsonText(shipped.ToJsonText()).ToJsonText(), shipped.ToJsonText());
  EXPECT_THROW(RuleTable::FromJsonText(R"({"default_class": {"name": "g"}, "classes": [], "x": 1})"),
               Error);
  EXPECT_THROW(RuleTable::FromJsonText(
                   R"({"default_class": {"name": "g", "validity_days": -1}, "classes": []})"),
               Error);
}

// ---- objective -----------------------------------------------------------

TEST(ObjectiveTest, ConsistencyPenalty) {
  EXPECT_EQ(ConsistencyPenalty(1.0), 0.0);
  EXPECT_EQ(ConsistencyPenalty(0.0), 1.0);
  EXPECT_EQ(ConsistencyPenalty(0.75), 0.25);
  EXPECT_THROW(ConsistencyPenalty(1.5), Error);
}

TEST(ObjectiveTest, GranularityPenaltyOnAllDepthPairs) {
  const TimePoint by_depth[] = {TimePoint::Year(2025), TimePoint::Month(2025, 3), Day("2025-03-15")};
  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b < 3; ++b) {
      EXPECT_EQ(GranularityPenalty(by_depth[a], by_depth[b]), std::abs(a - b));
    }
  }
  EXPECT_EQ(GranularityPenalty(TimePoint::Year(2025), Day("2025-03-15")), 2);
  EXPECT_EQ(GranularityPenalty(TimePoint::Month(2025, 3), TimePoint::Month(2025, 7)), 0);
  EXPECT_EQ(GranularityPenalty(TimePoint::Quarter(2025, 1), TimePoint::Month(2025, 7)), 0);
}

TEST(ObjectiveTest, TimeDistance) {
  EXPECT_EQ(TimeDistance(Day("2025-03-15"), Day("2025-03-15"), 365), 0.0);
  EXPECT_DOUBLE_EQ(TimeDistance(Day("2024-01-01"), Day("2024-12-31"), 365), 1.0);
  EXPECT_DOUBLE_EQ(TimeDistance(Day("2025-01-01"), Day("2025-03-15"), 365), 0.2);
  EXPECT_DOUBLE_EQ(TimeDistance(Day("2025-03-15"), Day("2025-01-01"), 365), 0.2);
  EXPECT_EQ(TimeDistance(Day("2020-01-01"), Day("2025-01-01"), 365), 1.0);
}

TEST(ObjectiveTest, TemporalObjectiveMatchesFormula) {
  EXPECT_EQ(TemporalObjective(0, 0, 0, 0.5, 0.5), 0.0);
  EXPECT_DOUBLE_EQ(TemporalObjective(0.2, 1, 0.3, 0.5, 0.5), 0.85);
  EXPECT_EQ(TemporalObjective(1, 0, 0, 0.5, 0.5), 1.0);
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 100; ++i) {
    const double d = u(rng), g = static_cast<double>(rng() % 3), c = u(rng), l1 = u(rng), l2 = u(rng);
    EXPECT_NEAR(TemporalObjective(d, g, c, l1, l2), oracle::Objective(d, g, c, l1, l2), 1e-12);
  }
}

TEST(ObjectiveTest, ScorePredictionCombinesTerms) {
  ObjectiveWeights w;
  EXPECT_DOUBLE_EQ(ScorePrediction(Day("2025-03-15"), 1.0, Day("2025-03-15"), w), 0.0);
  // 73 days apart, one depth level off, s_self 0.5.
  EXPECT_NEAR(ScorePrediction(TimePoint::Month(2025, 3), 0.5, Day("2025-05-28"), w),
              73.0 / 365 + 0.5 * 1 + 0.5 * 0.5, 1e-12);
}

// ---- remote backend ------------------------------------------------------

class MockModel {
 public:
  explicit MockModel(std::function<void(const httplib::Request&, httplib::Response&)> handler) {
    server_.Post("/v1/complete", std::move(handler));
    port_ = server_.bind_to_any_port("127.0.0.1");
    thread_ = std::thread([this] { server_.listen_after_bind(); });
    server_.wait_until_ready();
  }
  ~MockModel() {
    server_.stop();
    thread_.join();
  }
  std::string endpoint() const { return "http://127.0.0.1:" + std::to_string(port_) + "/v1/complete"; }

 private:
  httplib::Server server_;
  int port_ = 0;
  std::thread thread_;
};

PromptBundle FirePrompt() {
  auto s = FireScenario();
  return BuildPrompt(s.anchor, s.focus, s.search_time, {}, "", PromptMode::kForward);
}

ErrorCode CodeOf(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error";
  return ErrorCode::kInvalidArgument;
}

TEST(RemoteBackendTest, ParsesWellFormedReply) {
  std::atomic<int> calls{0};
  MockModel mock([&](const httplib::Request& req, httplib::Response& res) {
    ++calls;
    auto body = nlohmann::json::parse(req.body);
    EXPECT_EQ(body.at("mode"), "forward");
    EXPECT_EQ(body.at("chunk_count"), 1);
    EXPECT_TRUE(body.contains("response_schema"));
    res.set_content(
        R"({"steps": [{"kind": "evidence", "claim": "event", "chunk_id": 1, "time": "2025-05-30"}],)"
        R"( "conclusion": "2025-06-02"})",
        "application/json");
  });
  RemoteBackend backend({mock.endpoint(), 2, 200});
  Deadline deadline(SystemClock::Get(), Millis(2000));
  auto r = backend.Complete(FirePrompt(), 0, deadline);
  EXPECT_EQ(r.trajectory.conclusion, Day("2025-06-02"));
  EXPECT_EQ(calls.load(), 1);
}

TEST(RemoteBackendTest, SchemaViolation) {
  MockModel mock([](const httplib::Request&, httplib::Response& res) {
    res.set_content(R"({"answer": "soon"})", "application/json");
  });
  RemoteBackend backend({mock.endpoint(), 2, 200});
  Deadline deadline(SystemClock::Get(), Millis(2000));
  EXPECT_EQ(CodeOf([&] { backend.Complete(FirePrompt(), 0, deadline); }), ErrorCode::kBackendSchema);
}

TEST(RemoteBackendTest, HttpErrorIsTransport) {
  MockModel mock([](const httplib::Request&, httplib::Response& res) { res.status = 500; });
  RemoteBackend backend({mock.endpoint(), 2, 200});
  Deadline deadline(SystemClock::Get(), Millis(2000));
  EXPECT_EQ(CodeOf([&] { backend.Complete(FirePrompt(), 0, deadline); }), ErrorCode::kBackendTransport);
}

TEST(RemoteBackendTest, SlowReplyTimesOut) {
  MockModel mock([](const httplib::Request&, httplib::Response& res) {
    std::this_thread::sleep_for(std::chrono::milliseconds(400));
    res.set_content("{}", "application/json");
  });
  RemoteBackend backend({mock.endpoint(), 2, 200});
  const auto start = std::chrono::steady_clock::now();
  Deadline deadline(SystemClock::Get(), Millis(150));
  EXPECT_EQ(CodeOf([&] { backend.Complete(FirePrompt(), 0, deadline); }), ErrorCode::kBackendTimeout);
  EXPECT_LT(std::chrono::steady_clock::now() - start, std::chrono::milliseconds(1000));
}

TEST(RemoteBackendTest, UnreachableEndpointFails) {
  // Bind and release a port so nothing listens on it.
  int port = 0;
  {
    httplib::Server probe;
    port = probe.bind_to_any_port("127.0.0.1");
  }
  RemoteBackend backend({"http://127.0.0.1:" + std::to_string(port) + "/v1/complete", 2, 200});
  Deadline deadline(SystemClock::Get(), Millis(1000));
  EXPECT_TRUE(IsBackendFault(CodeOf([&] { backend.Complete(FirePrompt(), 0, deadline); })));
  EXPECT_THROW(RemoteBackend({"https://example.invalid/x", 1, 100}), Error);
}

}  // namespace
}  // namespace horizon::inference
