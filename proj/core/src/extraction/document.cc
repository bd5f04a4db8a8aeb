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

#include "horizon/extraction/document.h"

#include <fstream>
#include <istream>
#include <ostream>
#include <set>

#include "horizon/common/error.h"
#include "json.hpp"

namespace horizon::extraction {
namespace {

using nlohmann::json;

Document ParseDocument(const json& j) {
  for (const auto& [key, _] : j.items()) {
    static const std::set<std::string> kAllowed = {"docid", "title", "sentences",
                                                   "pub_time", "authority", "source"};
    if (!kAllowed.contains(key)) throw std::invalid_argument("unknown field '" + key + "'");
  }
  Document d;
  d.docid = j.at("docid").get<std::string>();
  if (d.docid.empty()) throw std::invalid_argument("empty docid");
  d.title = j.value("title", std::string());
  d.sentences = j.at("sentences").get<std::vector<std::string>>();
  auto pub = temporal::TimePoint::Parse(j.at("pub_time").get<std::string>());
  if (!pub || pub->depth() != 3) throw std::invalid_argument("pub_time must be YYYY-MM-DD");
  d.pub_time = *pub;
  d.authority = j.at("authority").get<double>();
  if (!(d.authority >= 0.0 && d.authority <= 1.0)) {
    throw std::invalid_argument("authority outside [0,1]");
  }
  d.source = j.value("source", std::string());
  return d;
}

}  // namespace

std::vector<Document> ReadDocuments(std::istream& in) {
  std::vector<Document> docs;
  std::vector<std::string> errors;
  std::set<std::string> seen;
  std::string line;
  for (int lineno = 1; std::getline(in, line); ++lineno) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      Document d = ParseDocument(json::parse(line));
      if (!seen.insert(d.docid).second) throw std::invalid_argument("duplicate docid " + d.docid);
      docs.push_back(std::move(d));
    } catch (const std::exception& e) {
      errors.push_back("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  if (!errors.empty()) {
    std::string msg = "document load failed:";
    for (const auto& e : errors) msg += "\n  " + e;
    throw Error(ErrorCode::kDataError, msg);
  }
  return docs;
}

std::vector<Document> LoadDocuments(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot open documents: " + path);
  return ReadDocuments(in);
}

std::string DocumentToJsonLine(const Document& doc) {
  json j = {{"docid", doc.docid},
            {"title", doc.title},
            {"sentences", doc.sentences},
            {"pub_time", doc.pub_time.ToString()},
            {"authority", doc.authority},
            {"source", doc.source}};
  return j.dump();
}

void WriteDocuments(std::ostream& out, const std::vector<Document>& docs) {
  for (const auto& d : docs) out << DocumentToJsonLine(d) << '\n';
}

}  // namespace horizon::extraction
