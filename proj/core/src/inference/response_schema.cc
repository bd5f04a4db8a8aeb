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

#include "horizon/inference/response_schema.h"

#include <algorithm>
#include <cmath>

#include "horizon/common/error.h"
#include "json.hpp"

namespace horizon::inference {
namespace {

using nlohmann::json;
using temporal::TimePoint;

[[noreturn]] void Reject(const std::string& why) {
  throw Error(ErrorCode::kBackendSchema, "response schema: " + why);
}

void OnlyKeys(const json& obj, std::initializer_list<std::string_view> allowed,
              std::string_view where) {
  for (const auto& [key, _] : obj.items()) {
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
      Reject(std::string(where) + " has unknown key '" + key + "'");
    }
  }
}

TimePoint ParseTime(const json& j, std::string_view where) {
  if (!j.is_string()) Reject(std::string(where) + " must be a date string");
  auto t = TimePoint::Parse(j.get<std::string>());
  if (!t) Reject(std::string(where) + " is not a valid date: " + j.get<std::string>());
  return *t;
}

}  // namespace

BackendResponse ParseResponse(std::string_view text, PromptMode mode, std::size_t chunk_count) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    Reject(std::string("not JSON: ") + e.what());
  }
  if (!root.is_object()) Reject("top level must be an object");
  OnlyKeys(root, {"steps", "conclusion", "self_score", "event_class"}, "response");

  BackendResponse out;
  if (!root.contains("steps") || !root["steps"].is_array()) Reject("steps must be an array");
  std::size_t index = 0;
  for (const auto& s : root["steps"]) {
    const std::string where = "steps[" + std::to_string(index++) + "]";
    if (!s.is_object()) Reject(where + " must be an object");
    OnlyKeys(s, {"kind", "claim", "chunk_id", "time"}, where);
    ReasoningStep step;
    if (!s.contains("kind") || !s["kind"].is_string()) Reject(where + ".kind missing");
    auto kind = StepKindFromName(s["kind"].get<std::string>());
    if (!kind) Reject(where + ".kind unknown: " + s["kind"].get<std::string>());
    step.kind = *kind;
    if (!s.contains("claim") || !s["claim"].is_string()) Reject(where + ".claim missing");
    step.claim = s["claim"].get<std::string>();
    if (!s.contains("chunk_id") || !s["chunk_id"].is_number_integer()) {
      Reject(where + ".chunk_id must be an integer");
    }
    const auto id = s["chunk_id"].get<long long>();
    if (id < 0 || static_cast<std::size_t>(id) > chunk_count) {
      Reject(where + ".chunk_id " + std::to_string(id) + " does not exist");
    }
    step.chunk_id = static_cast<int>(id);
    if (!s.contains("time")) Reject(where + ".time missing");
    if (!s["time"].is_null()) step.time = ParseTime(s["time"], where + ".time");
    out.trajectory.steps.push_back(std::move(step));
  }

  if (!root.contains("conclusion")) Reject("conclusion missing");
  const json& c = root["conclusion"];
  if (!(c.is_string() && c.get<std::string>() == "indeterminate")) {
    out.trajectory.conclusion = ParseTime(c, "conclusion");
  }

  if (root.contains("self_score")) {
    const json& score = root["self_score"];
    if (!score.is_number()) Reject("self_score must be a number");
    const double v = score.get<double>();
    if (!std::isfinite(v)) Reject("self_score must be finite");
    out.self_score = std::clamp(v, 0.0, 1.0);
  } else if (mode == PromptMode::kBackward) {
    Reject("self_score missing in backward mode");
  }

  if (root.contains("event_class")) {
    if (!root["event_class"].is_string()) Reject("event_class must be a string");
    out.event_class = root["event_class"].get<std::string>();
  }
  return out;
}

std::string SerializeResponse(const BackendResponse& response) {
  json root;
  root["steps"] = json::array();
  for (const auto& s : response.trajectory.steps) {
    root["steps"].push_back({{"kind", StepKindName(s.kind)},
                             {"claim", s.claim},
                             {"chunk_id", s.chunk_id},
                             {"time", s.time ? json(s.time->ToString()) : json(nullptr)}});
  }
  root["conclusion"] =
      response.trajectory.conclusion ? response.trajectory.conclusion->ToString() : "indeterminate";
  if (response.self_score) root["self_score"] = *response.self_score;
  if (!response.event_class.empty()) root["event_class"] = response.event_class;
  return root.dump();
}

const std::string& ResponseSchemaJson() {
  static const std::string kSchema = R"json({
  "type": "object",
  "additionalProperties": false,
  "required": ["steps", "conclusion"],
  "properties": {
    "steps": {"type": "array", "items": {
      "type": "object",
      "additionalProperties": false,
      "required": ["kind", "claim", "chunk_id", "time"],
      "properties": {
        "kind": {"enum": ["evidence", "expiry", "check"]},
        "claim": {"type": "string"},
        "chunk_id": {"type": "integer", "minimum": 0},
        "time": {"type": ["string", "null"]}}}},
    "conclusion": {"type": "string"},
    "self_score": {"type": "number", "minimum": 0, "maximum": 1},
    "event_class": {"type": "string"}}
})json";
  return kSchema;
}

}  // namespace horizon::inference
