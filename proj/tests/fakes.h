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

#ifndef HORIZON_TESTS_FAKES_H_
#define HORIZON_TESTS_FAKES_H_

#include <atomic>
#include <chrono>
#include <functional>
#include <mutex>

#include "horizon/common/clock.h"
#include "horizon/common/error.h"
#include "horizon/signal/threshold_service.h"

namespace horizon::testing {

// A threshold source whose behaviour is set per call. Counts every call.
class ScriptedSource final : public signal::ThresholdSource {
 public:
  using Script = std::function<signal::ComputedThreshold(const signal::ThresholdRequest&,
                                                         const Deadline&)>;

  explicit ScriptedSource(Script script = {}) : script_(std::move(script)) {}

  signal::ComputedThreshold Compute(const signal::ThresholdRequest& request,
                                    const Deadline& deadline) override {
    calls_.fetch_add(1);
    Script s;
    {
      std::lock_guard lock(mu_);
      s = script_;
    }
    return s(request, deadline);
  }

  void Set(Script script) {
    std::lock_guard lock(mu_);
    script_ = std::move(script);
  }
  int calls() const { return calls_.load(); }

  static Script Returns(temporal::TimePoint t, double s_self = 1.0) {
    return [t, s_self](const auto&, const auto&) { return signal::ComputedThreshold{t, s_self}; };
  }
  static Script Throws(ErrorCode code) {
    return [code](const auto&, const auto&) -> signal::ComputedThreshold {
      throw Error(code, "injected");
    };
  }
  // Advances `clock` past the deadline before answering.
  static Script Overruns(ManualClock& clock, temporal::TimePoint t) {
    return [&clock, t](const auto&, const Deadline& d) {
      clock.Advance(d.Remaining() + std::chrono::milliseconds(1));
      return signal::ComputedThreshold{t, 1.0};
    };
  }

 private:
  std::mutex mu_;
  Script script_;
  std::atomic<int> calls_{0};
};

}  // namespace horizon::testing

#endif  // HORIZON_TESTS_FAKES_H_
