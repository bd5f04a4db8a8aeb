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

#include "horizon/eval/offline_eval.h"

#include <cmath>
#include <iomanip>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "horizon/common/error.h"
#include "json.hpp"

namespace horizon::eval {
namespace {

using nlohmann::ordered_json;

SystemQueryResult Score(const std::vector<RankItem>& items, const std::vector<int>& labels,
                        const std::vector<temporal::TimePoint>& times,
                        const temporal::TimePoint& search_time, const EvalOptions& options) {
  SystemQueryResult r;
  const auto order = Rerank(items, options.weights);
  std::vector<temporal::TimePoint> ranked_times;
  std::vector<int> ranked_labels;
  for (std::size_t i : order) {
    ranked_times.push_back(times[i]);
    ranked_labels.push_back(labels[i]);
    r.ranking.push_back(items[i].docid);
  }
  for (int k : options.ks) {
    if (auto d = DayAwayAtK(ranked_times, k, search_time)) r.day_away[k] = *d;
  }
  r.pairs = CountPairs(ranked_labels);
  return r;
}

void Summarize(SystemSummary& summary, const std::vector<QueryDiagnostics>& queries,
               const std::vector<int>& ks, bool expiry) {
  for (int k : ks) {
    std::vector<double> medians;
    double median_sum = 0.0;
    double mean_sum = 0.0;
    for (const auto& q : queries) {
      const auto& sys = expiry ? q.expiry : q.baseline;
      auto it = sys.day_away.find(k);
      if (it == sys.day_away.end()) continue;
      medians.push_back(it->second.median);
      median_sum += it->second.median;
      mean_sum += it->second.mean;
    }
    DayAwaySummary s;
    s.queries = medians.size();
    if (!medians.empty()) {
      s.median = median_sum / static_cast<double>(medians.size());
      s.mean = mean_sum / static_cast<double>(medians.size());
      s.cross_query_median = Median(std::move(medians));
    }
    summary.day_away[k] = s;
  }
  for (const auto& q : queries) {
    const auto& sys = expiry ? q.expiry : q.baseline;
    summary.pairs[std::string(TierName(q.tier))] += sys.pairs;
    summary.pairs["all"] += sys.pairs;
  }
}

ordered_json RatioJson(const PairCounts& c) {
  auto r = PairwiseOrderingRatio(c);
  if (!r) return nullptr;
  if (std::isinf(*r)) return "inf";
  return *r;
}

ordered_json SummaryJson(const SystemSummary& s) {
  ordered_json j;
  ordered_json da = ordered_json::object();
  for (const auto& [k, v] : s.day_away) {
    da[std::to_string(k)] = {{"median", v.median},
                                  {"mean", v.mean},
                                  {"cross_query_median", v.cross_query_median},
                                  {"queries", v.queries}};
  }
  j["day_away"] = da;
  ordered_json pnr = ordered_json::object();
  for (const auto& [tier, c] : s.pairs) {
    pnr[tier] = {{"concordant", c.concordant}, {"discordant", c.discordant}, {"ratio", RatioJson(c)}};
  }
  j["pairwise_ordering_ratio"] = pnr;
  return j;
}

ordered_json SystemQueryJson(const SystemQueryResult& r, bool rankings) {
  ordered_json j;
  ordered_json da = ordered_json::object();
  for (const auto& [k, v] : r.day_away) {
    da[std::to_string(k)] = {{"median", v.median}, {"mean", v.mean}};
  }
  j["day_away"] = da;
  j["concordant"] = r.pairs.concordant;
  j["discordant"] = r.pairs.discordant;
  if (rankings) j["ranking"] = r.ranking;
  return j;
}

std::string FormatRatio(const std::optional<double>& r) {
  if (!r) return "n/a";
  if (std::isinf(*r)) return "inf";
  std::ostringstream os;
  os << std::fixed << std::setprecision(3) << *r;
  return os.str();
}

}  // namespace

EvalReport RunOfflineEval(const Corpus& corpus, signal::ThresholdService& service,
                          const EvalOptions& options, const extraction::Extractor* extractor,
                          const signal::ContentTimeEstimator* estimator) {
  ValidateWeights(options.weights);
  std::unordered_map<std::string, const extraction::Document*> docs;
  for (const auto& d : corpus.documents) docs.emplace(d.docid, &d);

  EvalReport report;
  report.ks = options.ks;
  report.include_rankings = options.include_rankings;
  report.num_queries = corpus.queries.size();

  for (const auto& q : corpus.queries) {
    std::vector<const extraction::Document*> cand_docs;
    signal::ThresholdRequest request{q.text, q.search_time, {}};
    for (const auto& c : q.candidates) {
      auto it = docs.find(c.docid);
      if (it == docs.end()) {
        throw Error(ErrorCode::kDataError, "query " + q.qid + ": unknown document " + c.docid);
      }
      cand_docs.push_back(it->second);
      request.docids.push_back(c.docid);
    }

    QueryDiagnostics diag;
    diag.qid = q.qid;
    diag.tier = q.tier;
    diag.gt_expiry = q.gt_expiry;
    const signal::ThresholdResult threshold = service.GetThreshold(request);
    diag.t_exp = threshold.t_exp;
    diag.provenance = threshold.provenance;
    diag.fallback_reason = threshold.reason;

    std::map<std::string, double> rel;
    if (extractor && !cand_docs.empty()) {
      rel = extractor->Extract(extractor->Anchor(q.text, q.search_time), cand_docs, q.search_time)
                .doc_scores;
    }

    std::vector<RankItem> baseline, expiry;
    std::vector<int> labels;
    std::vector<temporal::TimePoint> times;
    for (std::size_t i = 0; i < cand_docs.size(); ++i) {
      const auto& doc = *cand_docs[i];
      const auto& judgment = q.candidates[i];
      const auto doc_time = signal::DocumentTimeFactor(doc, options.time_factor, estimator);
      const double s_rel = rel.count(doc.docid) ? rel.at(doc.docid) : 0.0;
      times.push_back(doc_time);
      labels.push_back(judgment.label);

      // The control ranker knows only the recency window; the expiry-aware
      // ranker is the same model plus the expiry features.
      const int recent =
          temporal::ElapsedDays(doc_time, q.search_time) <= options.recency_window_days;
      const signal::ExpirySignal none;
      baseline.push_back({doc.docid, judgment.grade, recent,
                          signal::EmitFeatures(none, doc, s_rel, doc_time, q.search_time)});

      const signal::ExpirySignal sig = service.SignalFor(threshold, doc_time);
      diag.fresh_flags += sig.f_exp;
      expiry.push_back({doc.docid, judgment.grade, recent,
                        signal::EmitFeatures(sig, doc, s_rel, doc_time, q.search_time)});
    }
    diag.baseline = Score(baseline, labels, times, q.search_time, options);
    diag.expiry = Score(expiry, labels, times, q.search_time, options);
    report.queries.push_back(std::move(diag));
  }
  Summarize(report.baseline, report.queries, report.ks, false);
  Summarize(report.expiry, report.queries, report.ks, true);
  return report;
}

std::string EvalReport::ToJson() const {
  ordered_json j;
  j["num_queries"] = num_queries;
  j["ks"] = ks;
  j["baseline"] = SummaryJson(baseline);
  j["expiry_aware"] = SummaryJson(expiry);
  ordered_json deltas = ordered_json::object();
  for (int k : ks) {
    const auto& b = baseline.day_away.at(k);
    const auto& e = expiry.day_away.at(k);
    deltas["day_away@" + std::to_string(k)] = {{"median", e.median - b.median},
                                               {"mean", e.mean - b.mean},
                                               {"cross_query_median",
                                                e.cross_query_median - b.cross_query_median}};
  }
  j["deltas"] = deltas;
  ordered_json qs = ordered_json::array();
  for (const auto& q : queries) {
    ordered_json d;
    d["qid"] = q.qid;
    d["tier"] = TierName(q.tier);
    d["gt_expiry"] = q.gt_expiry ? ordered_json(q.gt_expiry->ToString()) : ordered_json(nullptr);
    d["t_exp"] = q.t_exp ? ordered_json(q.t_exp->ToString()) : ordered_json(nullptr);
    d["provenance"] = signal::ProvenanceName(q.provenance);
    if (!q.fallback_reason.empty()) d["fallback_reason"] = q.fallback_reason;
    d["fresh_flags"] = q.fresh_flags;
    d["baseline"] = SystemQueryJson(q.baseline, include_rankings);
    d["expiry_aware"] = SystemQueryJson(q.expiry, include_rankings);
    qs.push_back(std::move(d));
  }
  j["queries"] = qs;
  return j.dump(2) + "\n";
}

std::string EvalReport::ToTable() const {
  std::ostringstream os;
  os << "queries: " << num_queries << "\n";
  os << std::left << std::setw(24) << "metric" << std::setw(14) << "baseline" << std::setw(14)
     << "expiry-aware" << "delta\n";
  os << std::fixed << std::setprecision(3);
  for (int k : ks) {
    const auto& b = baseline.day_away.at(k);
    const auto& e = expiry.day_away.at(k);
    for (const auto& [label, bv, ev] : {std::tuple{"median", b.median, e.median},
                                        std::tuple{"mean", b.mean, e.mean},
                                        std::tuple{"xq-median", b.cross_query_median,
                                                   e.cross_query_median}}) {
      os << std::setw(24) << ("day_away@" + std::to_string(k) + " " + label) << std::setw(14) << bv
         << std::setw(14) << ev << (ev - bv) << "\n";
    }
  }
  for (const auto& [tier, bc] : baseline.pairs) {
    const PairCounts ec = expiry.pairs.count(tier) ? expiry.pairs.at(tier) : PairCounts{};
    os << std::setw(24) << ("pnr " + tier) << std::setw(14) << FormatRatio(PairwiseOrderingRatio(bc))
       << std::setw(14) << FormatRatio(PairwiseOrderingRatio(ec)) << "\n";
  }
  return os.str();
}

}  // namespace horizon::eval
