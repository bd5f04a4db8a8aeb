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

#ifndef HORIZON_INFERENCE_ORACLE_BACKEND_H_
#define HORIZON_INFERENCE_ORACLE_BACKEND_H_

#include <memory>

#include "horizon/extraction/tokenizer.h"
#include "horizon/inference/backend.h"
#include "horizon/inference/rule_table.h"

namespace horizon::inference {

// Deterministic stand-in for a reasoning model: a pure function of the
// prompt and the rule table.
//
// Forward: one evidence step per chunk the rule table can read, concluding
// with the horizon of the most relevant readable chunk (t_init). Horizons of
// other chunks that do not exceed t_init are asserted as expiry steps.
//
// Backward: any chunk whose horizon is later than the candidate contradicts
// it; those horizons are asserted as expiry steps, the conclusion moves to
// the latest of them and the self score is 0. Otherwise the self score is
// the fraction of forward evidence steps whose chunk horizon equals the
// candidate.
class OracleBackend final : public ReasoningBackend {
 public:
  explicit OracleBackend(std::shared_ptr<const RuleTable> rules,
                         std::shared_ptr<const extraction::Tokenizer> tokenizer = nullptr);

  BackendResponse Complete(const PromptBundle& prompt, int sample,
                           const Deadline& deadline) const override;
  std::string_view name() const override { return "oracle"; }

  // Event profile for a prompt, as used by Complete.
  EventProfile ProfileFor(const PromptBundle& prompt) const;

  const RuleTable& rules() const { return *rules_; }

 private:
  BackendResponse Forward(const PromptBundle& prompt) const;
  BackendResponse Backward(const PromptBundle& prompt) const;

  std::shared_ptr<const RuleTable> rules_;
  std::shared_ptr<const extraction::Tokenizer> tokenizer_;
};

}  // namespace horizon::inference

#endif  // HORIZON_INFERENCE_ORACLE_BACKEND_H_
