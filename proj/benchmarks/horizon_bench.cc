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

#include <memory>
#include <random>
#include <string>
#include <vector>

#include <benchmark/benchmark.h>

#include "horizon/common/clock.h"
#include "horizon/eval/generator.h"
#include "horizon/eval/offline_eval.h"
#include "horizon/fusion/fusion.h"
#include "horizon/inference/rule_table.h"
#include "horizon/service/config.h"
#include "horizon/service/runtime.h"

namespace horizon {
namespace {

using temporal::TimePoint;

service::Config BenchConfig(int queries) {
  auto cfg = service::Config::LoadFile(HORIZON_CONFIG_PATH);
  cfg.eval.num_queries = queries;
  return cfg;
}

eval::Corpus BenchCorpus(const service::Config& cfg) {
  eval::GeneratorParams params;
  params.seed = cfg.seed;
  params.num_queries = cfg.eval.num_queries;
  params.docs_per_query = cfg.eval.docs_per_query;
  return eval::GenerateCorpus(params, inference::RuleTable::Default());
}

std::vector<const extraction::Document*> DocsFor(const service::Runtime& rt, const eval::EvalQuery& q) {
  std::vector<const extraction::Document*> docs;
  for (const auto& c : q.candidates) docs.push_back(rt.store->Find(c.docid));
  return docs;
}

void BM_Extract(benchmark::State& state) {
  const auto cfg = BenchConfig(20);
  const auto corpus = BenchCorpus(cfg);
  ManualClock clock;
  auto rt = service::Runtime::Build(cfg, corpus.documents, clock);
  const auto& q = corpus.queries.front();
  const auto docs = DocsFor(*rt, q);
  const auto anchor = rt->extractor->Anchor(q.text, q.search_time);
  for (auto _ : state) {
    benchmark::DoNotOptimize(rt->extractor->Extract(anchor, docs, q.search_time));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(docs.size()));
}
BENCHMARK(BM_Extract);

void BM_Fuse(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::mt19937_64 rng(1);
  std::vector<TimePoint> candidates;
  for (int i = 0; i < 8; ++i) candidates.push_back(temporal::AddDays(TimePoint::Day(2025, 1, 1), i * 17));
  extraction::FocusedChunkSet focus;
  for (int i = 0; i < n; ++i) {
    extraction::FocusedChunk c;
    c.s_rel = 0.5 + static_cast<double>(rng() % 50) / 100.0;
    c.authority = 0.5;
    c.anchor_times = {candidates[rng() % candidates.size()]};
    focus.chunks.push_back(std::move(c));
  }
  for (auto _ : state) benchmark::DoNotOptimize(fusion::Fuse(candidates, focus, {}));
}
BENCHMARK(BM_Fuse)->Arg(8)->Arg(64)->Arg(512);

void BM_PipelineRun(benchmark::State& state) {
  const auto cfg = BenchConfig(20);
  const auto corpus = BenchCorpus(cfg);
  ManualClock clock;
  auto rt = service::Runtime::Build(cfg, corpus.documents, clock);
  const auto& q = corpus.queries.front();
  const auto docs = DocsFor(*rt, q);
  for (auto _ : state) {
    try {
      benchmark::DoNotOptimize(rt->pipeline->Run(q.text, q.search_time, docs, Deadline(clock, Millis(1000))));
    } catch (const std::exception&) {
    }
  }
}
BENCHMARK(BM_PipelineRun);

void BM_ThresholdCacheHit(benchmark::State& state) {
  const auto cfg = BenchConfig(20);
  const auto corpus = BenchCorpus(cfg);
  ManualClock clock;
  auto rt = service::Runtime::Build(cfg, corpus.documents, clock);
  const auto& q = corpus.queries.front();
  signal::ThresholdRequest req{q.text, q.search_time, {}};
  rt->service->GetThreshold(req);
  for (auto _ : state) benchmark::DoNotOptimize(rt->service->GetThreshold(req));
}
BENCHMARK(BM_ThresholdCacheHit);

void BM_OfflineEval(benchmark::State& state) {
  const auto cfg = BenchConfig(static_cast<int>(state.range(0)));
  const auto corpus = BenchCorpus(cfg);
  for (auto _ : state) {
    ManualClock clock;
    auto rt = service::Runtime::Build(cfg, corpus.documents, clock);
    benchmark::DoNotOptimize(
        eval::RunOfflineEval(corpus, *rt->service, {}, rt->extractor.get(), rt->pipeline.get()));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_OfflineEval)->Arg(50)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace horizon

BENCHMARK_MAIN();
