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

#include "horizon/inference/prompt.h"

#include <fstream>
#include <iomanip>
#include <sstream>

#include "horizon/common/error.h"
#include "json.hpp"

namespace horizon::inference {
namespace {

using nlohmann::json;

const std::vector<std::string>& NegativeConstraints() {
  static const std::vector<std::string> kConstraints = {
      "Do not extract auxiliary dates such as publication, update or copyright dates.",
      "Do not conflate distinct temporal entities; keep each event's date separate.",
      "Do not invent dates that no chunk states.",
  };
  return kConstraints;
}

std::string Join(const std::vector<std::string>& parts, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

}  // namespace

std::string_view PromptModeName(PromptMode mode) {
  return mode == PromptMode::kForward ? "forward" : "backward";
}

std::vector<Exemplar> ReadExemplars(std::istream& in) {
  std::vector<Exemplar> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      json j = json::parse(line);
      Exemplar e;
      e.domain = j.at("domain").get<std::string>();
      e.query = j.at("query").get<std::string>();
      e.chunks = j.at("chunks").get<std::vector<std::string>>();
      e.reasoning = j.at("reasoning").get<std::string>();
      e.expiry = j.at("expiry").get<std::string>();
      if (!temporal::TimePoint::Parse(e.expiry)) {
        throw Error(ErrorCode::kDataError, "bad expiry '" + e.expiry + "'");
      }
      out.push_back(std::move(e));
    } catch (const std::exception& e) {
      throw Error(ErrorCode::kDataError,
                  "exemplar line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return out;
}

std::vector<Exemplar> LoadExemplars(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot open exemplar file: " + path);
  return ReadExemplars(in);
}

PromptBundle BuildPrompt(const extraction::QueryAnchor& anchor,
                         const extraction::FocusedChunkSet& focus,
                         const temporal::TimePoint& search_time,
                         std::span<const Exemplar> exemplars, std::string_view domain,
                         PromptMode mode, const std::optional<temporal::TimePoint>& candidate,
                         const ReasoningTrajectory* forward) {
  if (focus.chunks.empty()) throw Error(ErrorCode::kNoEvidence, "no evidence");
  if (search_time.depth() != 3) {
    throw Error(ErrorCode::kInvalidArgument, "search time must be a full date");
  }
  if (mode == PromptMode::kBackward && !candidate) {
    throw Error(ErrorCode::kInvalidArgument, "backward prompt needs a candidate");
  }

  PromptBundle b;
  b.query = anchor.raw_query;
  b.keywords = anchor.keywords;
  b.chunks = focus.chunks;
  b.search_time = search_time;
  b.negative_constraints = NegativeConstraints();
  b.mode = mode;
  if (mode == PromptMode::kBackward) {
    b.candidate = candidate;
    if (forward) b.forward = *forward;
  }
  for (const auto& e : exemplars) {
    if (b.few_shot.size() < kMaxExemplars && e.domain == domain) b.few_shot.push_back(e);
  }
  for (const auto& e : exemplars) {
    if (b.few_shot.size() < kMaxExemplars && e.domain == "general" && domain != "general") {
      b.few_shot.push_back(e);
    }
  }
  return b;
}

std::string PromptBundle::Render() const {
  std::ostringstream os;
  os << "You infer the expiration horizon of a search query: the latest date such that "
        "content describing the current state must be newer than it.\n";
  os << "Search time: " << search_time.ToString() << "\n";
  os << "Query: " << query << "\n";
  os << "Constraints:\n";
  for (const auto& c : negative_constraints) os << "- " << c << "\n";

  for (std::size_t i = 0; i < few_shot.size(); ++i) {
    const Exemplar& e = few_shot[i];
    os << "Example " << i + 1 << " (" << e.domain << ")\n";
    os << "  query: " << e.query << "\n";
    for (const auto& c : e.chunks) os << "  evidence: " << c << "\n";
    os << "  reasoning: " << e.reasoning << "\n";
    os << "  expiration: " << e.expiry << "\n";
  }

  for (std::size_t i = 0; i < chunks.size(); ++i) {
    const auto& c = chunks[i];
    std::vector<std::string> times;
    for (const auto& t : c.anchor_times) times.push_back(t.ToString());
    os << "[chunk " << i + 1 << "] source=" << c.source_id << " authority=" << std::fixed
       << std::setprecision(2) << c.authority << " relevance=" << std::setprecision(3)
       << c.s_rel;
    os.unsetf(std::ios::floatfield);
    if (c.pub_time) os << " published=" << c.pub_time->ToString();
    os << " times=" << (times.empty() ? "none" : Join(times, ",")) << "\n";
    os << c.Text() << "\n";
  }

  if (mode == PromptMode::kForward) {
    os << "Mode: forward. Cite chunk ids, list event start times and validity periods, "
          "then conclude with one expiration date or \"indeterminate\".\n";
  } else {
    os << "Mode: backward. Assume the expiration is " << candidate->ToString()
       << " and stress-test it: re-derive what each chunk implies, report any later "
          "superseding event, and score how many forward steps still hold.\n";
    os << "Candidate: " << candidate->ToString() << "\n";
    for (const auto& s : forward.steps) {
      os << "  forward " << StepKindName(s.kind) << " chunk=" << s.chunk_id
         << " time=" << (s.time ? s.time->ToString() : "none") << " : " << s.claim << "\n";
    }
  }
  return os.str();
}

}  // namespace horizon::inference
