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

#include "horizon/inference/oracle_backend.h"

#include <algorithm>

#include "horizon/common/error.h"

namespace horizon::inference {
namespace {

using temporal::DaysBetween;
using temporal::TimePoint;

bool SameDay(const TimePoint& a, const TimePoint& b) { return DaysBetween(a, b) == 0; }
bool After(const TimePoint& a, const TimePoint& b) { return DaysBetween(b, a) > 0; }

std::string ChunkRef(std::size_t id) { return "chunk " + std::to_string(id); }

}  // namespace

OracleBackend::OracleBackend(std::shared_ptr<const RuleTable> rules,
                             std::shared_ptr<const extraction::Tokenizer> tokenizer)
    : rules_(std::move(rules)),
      tokenizer_(tokenizer ? std::move(tokenizer)
                           : std::make_shared<const extraction::Tokenizer>()) {
  if (!rules_) throw Error(ErrorCode::kInvalidArgument, "oracle backend needs a rule table");
}

EventProfile OracleBackend::ProfileFor(const PromptBundle& prompt) const {
  std::vector<std::string> evidence;
  for (const auto& c : prompt.chunks) {
    auto words = tokenizer_->Words(c.Text());
    evidence.insert(evidence.end(), words.begin(), words.end());
  }
  return rules_->Profile(prompt.keywords, evidence);
}

BackendResponse OracleBackend::Complete(const PromptBundle& prompt, int /*sample*/,
                                        const Deadline& /*deadline*/) const {
  return prompt.mode == PromptMode::kForward ? Forward(prompt) : Backward(prompt);
}

BackendResponse OracleBackend::Forward(const PromptBundle& prompt) const {
  const EventProfile profile = ProfileFor(prompt);
  BackendResponse out;
  out.event_class = profile.event_class;

  std::vector<std::pair<std::size_t, ChunkReading>> readings;
  for (std::size_t i = 0; i < prompt.chunks.size(); ++i) {
    auto r = rules_->Read(prompt.chunks[i], profile, prompt.search_time);
    if (!r) continue;
    const std::size_t id = i + 1;
    ReasoningStep step{StepKind::kEvidence, "", static_cast<int>(id), std::nullopt};
    if (r->latest_start) {
      step.claim = ChunkRef(id) + " reports an event at " + r->latest_start->ToString();
      step.time = r->latest_start;
    } else {
      step.claim = ChunkRef(id) + " states validity until " + r->explicit_expiry->ToString();
      step.time = r->explicit_expiry;
    }
    out.trajectory.steps.push_back(std::move(step));
    readings.emplace_back(id, *r);
  }
  if (readings.empty()) return out;  // indeterminate

  const TimePoint t_init = readings.front().second.horizon;
  std::vector<TimePoint> asserted;
  for (const auto& [id, r] : readings) {
    if (After(r.horizon, t_init)) continue;
    if (std::any_of(asserted.begin(), asserted.end(),
                    [&](const TimePoint& t) { return SameDay(t, r.horizon); })) {
      continue;
    }
    asserted.push_back(r.horizon);
    std::string claim = ChunkRef(id) + " implies expiration " + r.horizon.ToString();
    claim += r.explicit_expiry ? " (explicit validity statement)"
                               : " (" + profile.event_class + ", " +
                                     std::to_string(profile.validity_days) + " days)";
    out.trajectory.steps.push_back({StepKind::kExpiry, std::move(claim), static_cast<int>(id),
                                    r.horizon});
  }
  out.trajectory.conclusion = t_init;
  return out;
}

BackendResponse OracleBackend::Backward(const PromptBundle& prompt) const {
  const EventProfile profile = ProfileFor(prompt);
  const TimePoint& candidate = *prompt.candidate;
  BackendResponse out;
  out.event_class = profile.event_class;

  std::vector<std::optional<ChunkReading>> readings;
  for (const auto& c : prompt.chunks) {
    readings.push_back(rules_->Read(c, profile, prompt.search_time));
  }

  std::optional<TimePoint> latest;
  for (std::size_t i = 0; i < readings.size(); ++i) {
    const auto& r = readings[i];
    if (!r || !After(r->horizon, candidate)) continue;
    out.trajectory.steps.push_back(
        {StepKind::kExpiry,
         ChunkRef(i + 1) + " reports a later event; expiration cannot precede " +
             r->horizon.ToString(),
         static_cast<int>(i + 1), r->horizon});
    if (!latest || After(r->horizon, *latest)) latest = r->horizon;
  }
  if (latest) {
    out.trajectory.conclusion = latest;
    out.self_score = 0.0;
    return out;
  }

  std::size_t evidence = 0;
  std::size_t confirmed = 0;
  for (const auto& s : prompt.forward.steps) {
    if (s.kind != StepKind::kEvidence) continue;
    ++evidence;
    const std::size_t idx = static_cast<std::size_t>(s.chunk_id);
    const bool ok = idx >= 1 && idx <= readings.size() && readings[idx - 1] &&
                    SameDay(readings[idx - 1]->horizon, candidate);
    if (ok) ++confirmed;
    out.trajectory.steps.push_back(
        {StepKind::kCheck,
         ChunkRef(idx) + (ok ? " confirms " : " does not confirm ") + candidate.ToString(),
         s.chunk_id, s.time});
  }
  out.trajectory.conclusion = candidate;
  out.self_score = evidence ? static_cast<double>(confirmed) / static_cast<double>(evidence) : 0.0;
  return out;
}

}  // namespace horizon::inference
