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

#include "commands.h"

#include <csignal>
#include <filesystem>
#include <fstream>

#include "horizon/eval/corpus.h"
#include "horizon/eval/generator.h"
#include "horizon/eval/offline_eval.h"
#include "horizon/service/http_service.h"
#include "horizon/service/runtime.h"
#include "json.hpp"
#include "spdlog/spdlog.h"

namespace horizon::tools {
namespace {

using nlohmann::ordered_json;
using temporal::TimePoint;

std::vector<extraction::Document> LoadDocumentSet(const std::string& path) {
  if (path.empty()) return {};
  if (std::filesystem::is_directory(path)) {
    return extraction::LoadDocuments((std::filesystem::path(path) / eval::kDocumentsFile).string());
  }
  return extraction::LoadDocuments(path);
}

TimePoint SearchTime(const std::string& text) {
  if (text.empty()) {
    return TimePoint::FromDays(std::chrono::floor<std::chrono::days>(std::chrono::system_clock::now()));
  }
  auto t = TimePoint::Parse(text);
  if (!t || t->granularity() != temporal::Granularity::kDay) {
    throw Error(ErrorCode::kInvalidArgument, "--search-time must be YYYY-MM-DD");
  }
  return *t;
}

ordered_json Times(const std::vector<TimePoint>& times) {
  ordered_json out = ordered_json::array();
  for (const auto& t : times) out.push_back(t.ToString());
  return out;
}

ordered_json OptionalTime(const std::optional<TimePoint>& t) {
  return t ? ordered_json(t->ToString()) : ordered_json(nullptr);
}

ordered_json TrajectoryJson(const inference::ReasoningTrajectory& tr) {
  ordered_json steps = ordered_json::array();
  for (const auto& s : tr.steps) {
    steps.push_back({{"kind", inference::StepKindName(s.kind)},
                     {"chunk_id", s.chunk_id},
                     {"time", OptionalTime(s.time)},
                     {"claim", s.claim}});
  }
  return {{"steps", steps}, {"conclusion", OptionalTime(tr.conclusion)}};
}

// Batch commands run on a clock frozen at start-up, so results depend on
// the data and never on how long a run takes.
ManualClock& BatchClock() {
  static ManualClock clock(std::chrono::system_clock::now());
  return clock;
}

std::unique_ptr<service::Runtime> BuildRuntime(const CommonArgs& common,
                                               std::vector<extraction::Document> docs,
                                               const Clock& clock) {
  return service::Runtime::Build(common.config, std::move(docs), clock);
}

void Emit(const std::string& text, const std::string& out_path, std::ostream& out) {
  if (out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(out_path);
  if (!f) throw Error(ErrorCode::kIo, "cannot write " + out_path);
  f << text;
}

}  // namespace

int ExitCodeFor(ErrorCode code) {
  if (IsBackendFault(code)) return kExitBackend;
  if (code == ErrorCode::kInvalidArgument) return kExitUsage;
  return kExitData;
}

int RunExtract(const CommonArgs& common, const QueryArgs& q, std::ostream& out) {
  const TimePoint search_time = SearchTime(q.search_time);
  auto rt = BuildRuntime(common, LoadDocumentSet(common.corpus), BatchClock());
  std::vector<const extraction::Document*> docs;
  for (const auto& d : rt->store->documents()) docs.push_back(&d);

  const auto anchor = rt->extractor->Anchor(q.query, search_time);
  const auto result = rt->extractor->Extract(anchor, docs, search_time);
  ordered_json chunks = ordered_json::array();
  for (const auto& c : result.focus.chunks) {
    chunks.push_back({{"source_id", c.source_id},
                      {"start", c.start},
                      {"end", c.end},
                      {"fallback", c.from_fallback()},
                      {"rel_k", c.rel_k},
                      {"rel_t", c.rel_t},
                      {"s_rel", c.s_rel},
                      {"authority", c.authority},
                      {"anchor_times", Times(c.anchor_times)},
                      {"text", c.Text()}});
  }
  ordered_json j{{"query", q.query},
                 {"search_time", search_time.ToString()},
                 {"keywords", anchor.keywords},
                 {"temporal_entities", Times(anchor.temporal_entities)},
                 {"documents", docs.size()},
                 {"fallback_used", result.focus.fallback_used},
                 {"chunks", chunks}};
  Emit(j.dump(2) + "\n", common.out, out);
  return kExitOk;
}

int RunInfer(const CommonArgs& common, const QueryArgs& q, std::ostream& out) {
  const TimePoint search_time = SearchTime(q.search_time);
  auto rt = BuildRuntime(common, LoadDocumentSet(common.corpus), BatchClock());
  std::vector<const extraction::Document*> docs;
  for (const auto& d : rt->store->documents()) docs.push_back(&d);

  ordered_json j{{"query", q.query}, {"search_time", search_time.ToString()}};
  int code = kExitOk;
  try {
    const Deadline deadline(BatchClock(), Millis(common.config.backend_deadline_ms()));
    const auto r = rt->pipeline->Run(q.query, search_time, docs, deadline);
    ordered_json support = ordered_json::array();
    for (const auto& [t, w] : r.verdict.support) {
      support.push_back({{"time", t.ToString()}, {"weight", w}});
    }
    j["provenance"] = "backend";
    j["event_class"] = r.profile.event_class;
    j["validity_days"] = r.profile.validity_days;
    j["t_init"] = r.outcome.t_init.ToString();
    j["candidates"] = Times(r.outcome.candidates);
    j["t_exp"] = r.verdict.t_exp.ToString();
    j["support"] = support;
    j["tie_broken"] = r.verdict.tie_broken;
    j["s_self"] = r.verdict.s_self;
    j["l_cons"] = 1.0 - r.verdict.s_self;
    j["chunk_count"] = r.verdict.chunk_count;
    j["samples_run"] = r.samples_run;
    j["forward"] = TrajectoryJson(r.outcome.forward);
    j["backward"] = TrajectoryJson(r.outcome.backward);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kInvalidArgument) throw;
    j["provenance"] = "fallback";
    j["t_exp"] = nullptr;
    j["error"] = ErrorCodeName(e.code());
    j["reason"] = e.what();
    code = ExitCodeFor(e.code());
  }
  Emit(j.dump(2) + "\n", common.out, out);
  return code;
}

int RunEval(const CommonArgs& common, bool include_rankings, const std::string& save_corpus,
            std::ostream& out) {
  const auto& cfg = common.config;
  eval::Corpus corpus;
  if (!common.corpus.empty()) {
    corpus = eval::LoadCorpus(common.corpus);
  } else {
    const auto rules = cfg.inference.rules_path.empty()
                           ? inference::RuleTable::Default()
                           : inference::RuleTable::LoadFile(cfg.inference.rules_path);
    eval::GeneratorParams params;
    params.seed = cfg.seed;
    params.num_queries = cfg.eval.num_queries;
    params.docs_per_query = cfg.eval.docs_per_query;
    corpus = eval::GenerateCorpus(params, rules);
  }
  if (!save_corpus.empty()) eval::WriteCorpus(save_corpus, corpus);

  auto rt = BuildRuntime(common, corpus.documents, BatchClock());
  eval::EvalOptions options;
  options.ks = cfg.eval.ks;
  options.weights = cfg.rerank;
  options.recency_window_days = cfg.eval.recency_window_days;
  options.time_factor = cfg.signal.time_factor;
  options.include_rankings = include_rankings;
  const auto report =
      eval::RunOfflineEval(corpus, *rt->service, options, rt->extractor.get(), rt->pipeline.get());

  if (common.out.empty()) {
    out << report.ToTable();
  } else {
    std::filesystem::create_directories(common.out);
    const auto dir = std::filesystem::path(common.out);
    Emit(report.ToJson(), (dir / "report.json").string(), out);
    Emit(report.ToTable(), (dir / "report.txt").string(), out);
    out << report.ToTable();
  }
  return kExitOk;
}

int RunCacheBuild(const CommonArgs& common, std::ostream& out) {
  service::Config cfg = common.config;
  if (!common.out.empty()) cfg.cache.path = common.out;
  if (cfg.cache.path.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "cache-build needs --out or cache.path");
  }
  if (common.corpus.empty()) throw Error(ErrorCode::kInvalidArgument, "cache-build needs --corpus");
  auto corpus = eval::LoadCorpus(common.corpus);
  auto rt = service::Runtime::Build(cfg, std::move(corpus.documents), BatchClock());

  std::size_t cached = 0, fallbacks = 0;
  for (const auto& q : corpus.queries) {
    signal::ThresholdRequest request{q.text, q.search_time, {}};
    for (const auto& c : q.candidates) request.docids.push_back(c.docid);
    const auto r = rt->service->GetThreshold(request);
    if (r.provenance == signal::Provenance::kFallback) {
      ++fallbacks;
      spdlog::info("{}: no threshold ({})", q.qid, r.reason);
    } else {
      ++cached;
    }
  }
  rt->cache->Compact();
  ordered_json j{{"queries", corpus.queries.size()},
                 {"cached", cached},
                 {"fallbacks", fallbacks},
                 {"entries", rt->cache->size()},
                 {"path", cfg.cache.path}};
  out << j.dump(2) << "\n";
  return kExitOk;
}

int RunServe(const CommonArgs& common) {
  auto rt = service::Runtime::Build(common.config, LoadDocumentSet(common.corpus));
  service::HttpService http(*rt->service, {common.config.service.host, common.config.service.port,
                                           common.config.service.enable_test_hooks});
  // Block termination signals before the server thread starts so that only
  // this thread receives them.
  sigset_t set;
  sigemptyset(&set);
  sigaddset(&set, SIGINT);
  sigaddset(&set, SIGTERM);
  pthread_sigmask(SIG_BLOCK, &set, nullptr);
  const int port = http.Start();
  spdlog::info("serving on {}:{} with {} documents", common.config.service.host, port,
               rt->store->size());
  int sig = 0;
  sigwait(&set, &sig);
  spdlog::info("signal {} received, shutting down", sig);
  http.Stop();
  return kExitOk;
}

}  // namespace horizon::tools
