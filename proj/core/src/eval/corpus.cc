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

#include "horizon/eval/corpus.h"

#include <filesystem>
#include <fstream>
#include <set>
#include <stdexcept>

#include "horizon/common/error.h"
#include "json.hpp"

namespace horizon::eval {
namespace {

using nlohmann::json;

void OnlyKeys(const json& j, const std::set<std::string>& allowed) {
  for (const auto& [key, _] : j.items()) {
    if (!allowed.contains(key)) throw std::invalid_argument("unknown field '" + key + "'");
  }
}

temporal::TimePoint ParseDay(const json& j, const char* field) {
  auto t = temporal::TimePoint::Parse(j.get<std::string>());
  if (!t || t->depth() != 3) {
    throw std::invalid_argument(std::string(field) + " must be YYYY-MM-DD");
  }
  return *t;
}

EvalQuery ParseQuery(const json& j) {
  OnlyKeys(j, {"qid", "text", "search_time", "tier", "gt_expiry", "candidates"});
  EvalQuery q;
  q.qid = j.at("qid").get<std::string>();
  if (q.qid.empty()) throw std::invalid_argument("empty qid");
  q.text = j.at("text").get<std::string>();
  q.search_time = ParseDay(j.at("search_time"), "search_time");
  auto tier = TierFromName(j.at("tier").get<std::string>());
  if (!tier) throw std::invalid_argument("tier must be none, month or week");
  q.tier = *tier;
  if (j.contains("gt_expiry") && !j["gt_expiry"].is_null()) {
    auto t = temporal::TimePoint::Parse(j["gt_expiry"].get<std::string>());
    if (!t) throw std::invalid_argument("bad gt_expiry");
    q.gt_expiry = *t;
  }
  std::set<std::string> seen;
  for (const auto& c : j.at("candidates")) {
    OnlyKeys(c, {"docid", "grade", "label"});
    CandidateJudgment cj{c.at("docid").get<std::string>(), c.at("grade").get<int>(),
                         c.at("label").get<int>()};
    if (cj.grade < 0 || cj.grade > 4) throw std::invalid_argument("grade outside 0-4");
    if (cj.label < 0 || cj.label > 2) throw std::invalid_argument("label outside 0-2");
    if (!seen.insert(cj.docid).second) {
      throw std::invalid_argument("candidate " + cj.docid + " listed twice");
    }
    q.candidates.push_back(std::move(cj));
  }
  return q;
}

}  // namespace

std::string_view TierName(FreshnessTier t) {
  switch (t) {
    case FreshnessTier::kNone: return "none";
    case FreshnessTier::kMonth: return "month";
    case FreshnessTier::kWeek: return "week";
  }
  return "none";
}

std::optional<FreshnessTier> TierFromName(std::string_view name) {
  if (name == "none") return FreshnessTier::kNone;
  if (name == "month") return FreshnessTier::kMonth;
  if (name == "week") return FreshnessTier::kWeek;
  return std::nullopt;
}

std::vector<EvalQuery> ReadQueries(std::istream& in) {
  std::vector<EvalQuery> out;
  std::vector<std::string> errors;
  std::set<std::string> qids;
  std::string line;
  for (int lineno = 1; std::getline(in, line); ++lineno) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      EvalQuery q = ParseQuery(json::parse(line));
      if (!qids.insert(q.qid).second) throw std::invalid_argument("duplicate qid " + q.qid);
      out.push_back(std::move(q));
    } catch (const std::exception& e) {
      errors.push_back("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  if (!errors.empty()) {
    std::string msg = "query load failed:";
    for (const auto& e : errors) msg += "\n  " + e;
    throw Error(ErrorCode::kDataError, msg);
  }
  return out;
}

std::vector<EvalQuery> LoadQueries(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot open queries: " + path);
  return ReadQueries(in);
}

std::string QueryToJsonLine(const EvalQuery& q) {
  json cands = json::array();
  for (const auto& c : q.candidates) {
    cands.push_back({{"docid", c.docid}, {"grade", c.grade}, {"label", c.label}});
  }
  json j = {{"qid", q.qid},
            {"text", q.text},
            {"search_time", q.search_time.ToString()},
            {"tier", TierName(q.tier)},
            {"gt_expiry", q.gt_expiry ? json(q.gt_expiry->ToString()) : json(nullptr)},
            {"candidates", cands}};
  return j.dump();
}

void WriteQueries(std::ostream& out, const std::vector<EvalQuery>& queries) {
  for (const auto& q : queries) out << QueryToJsonLine(q) << '\n';
}

Corpus LoadCorpus(const std::string& dir) {
  const std::filesystem::path root(dir);
  Corpus c;
  c.documents = extraction::LoadDocuments((root / kDocumentsFile).string());
  c.queries = LoadQueries((root / kQueriesFile).string());
  std::set<std::string> ids;
  for (const auto& d : c.documents) ids.insert(d.docid);
  std::vector<std::string> errors;
  for (const auto& q : c.queries) {
    for (const auto& cand : q.candidates) {
      if (!ids.contains(cand.docid)) {
        errors.push_back("query " + q.qid + ": unknown document " + cand.docid);
      }
    }
  }
  if (!errors.empty()) {
    std::string msg = "corpus load failed:";
    for (const auto& e : errors) msg += "\n  " + e;
    throw Error(ErrorCode::kDataError, msg);
  }
  return c;
}

void WriteCorpus(const std::string& dir, const Corpus& corpus) {
  const std::filesystem::path root(dir);
  std::filesystem::create_directories(root);
  std::ofstream docs(root / kDocumentsFile);
  std::ofstream queries(root / kQueriesFile);
  if (!docs || !queries) throw Error(ErrorCode::kIo, "cannot write corpus to " + dir);
  extraction::WriteDocuments(docs, corpus.documents);
  WriteQueries(queries, corpus.queries);
}

}  // namespace horizon::eval
