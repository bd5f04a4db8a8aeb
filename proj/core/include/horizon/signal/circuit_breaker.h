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

#ifndef HORIZON_SIGNAL_CIRCUIT_BREAKER_H_
#define HORIZON_SIGNAL_CIRCUIT_BREAKER_H_

#include <mutex>
#include <optional>
#include <string_view>

#include "horizon/common/clock.h"

namespace horizon::signal {

enum class BreakerState { kClosed, kOpen, kHalfOpen };

std::string_view BreakerStateName(BreakerState s);

struct BreakerConfig {
  int failure_threshold = 5;
  Millis open_duration{30000};
  int half_open_probes = 1;
};

struct BreakerSnapshot {
  BreakerState state = BreakerState::kClosed;
  int consecutive_failures = 0;
  std::optional<Instant> opened_at;
  // Probes admitted in the current half-open period.
  int probes_admitted = 0;
};

// Closed -> open after failure_threshold consecutive failures. Once
// open_duration has elapsed the next Allow() moves to half-open, which
// admits exactly half_open_probes requests. Any probe failure reopens the
// breaker; once every probe has succeeded it closes. All transitions happen
// under one mutex.
class CircuitBreaker {
 public:
  CircuitBreaker(const Clock& clock, BreakerConfig config);

  // True when the caller may try the protected operation. Every true answer
  // must be followed by RecordSuccess or RecordFailure.
  bool Allow();
  void RecordSuccess();
  void RecordFailure();

  // Test hooks.
  void ForceOpen();
  void ForceClosed();

  BreakerState state() const;
  BreakerSnapshot Snapshot() const;
  const BreakerConfig& config() const { return config_; }

 private:
  void OpenLocked();

  const Clock& clock_;
  BreakerConfig config_;
  mutable std::mutex mu_;
  BreakerState state_ = BreakerState::kClosed;
  int consecutive_failures_ = 0;
  std::optional<Instant> opened_at_;
  int probes_admitted_ = 0;
  int probes_succeeded_ = 0;
};

}  // namespace horizon::signal

#endif  // HORIZON_SIGNAL_CIRCUIT_BREAKER_H_
