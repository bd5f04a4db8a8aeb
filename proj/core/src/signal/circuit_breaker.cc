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

#include "horizon/signal/circuit_breaker.h"

#include <spdlog/spdlog.h>

#include "horizon/common/error.h"

namespace horizon::signal {

std::string_view BreakerStateName(BreakerState s) {
  switch (s) {
    case BreakerState::kClosed: return "closed";
    case BreakerState::kOpen: return "open";
    case BreakerState::kHalfOpen: return "half_open";
  }
  return "closed";
}

CircuitBreaker::CircuitBreaker(const Clock& clock, BreakerConfig config)
    : clock_(clock), config_(config) {
  if (config_.failure_threshold < 1 || config_.half_open_probes < 1 ||
      config_.open_duration.count() < 0) {
    throw Error(ErrorCode::kInvalidArgument, "invalid circuit breaker configuration");
  }
}

void CircuitBreaker::OpenLocked() {
  state_ = BreakerState::kOpen;
  opened_at_ = clock_.Now();
  probes_admitted_ = 0;
  probes_succeeded_ = 0;
  spdlog::debug("circuit breaker opened after {} failures", consecutive_failures_);
}

bool CircuitBreaker::Allow() {
  std::lock_guard lock(mu_);
  switch (state_) {
    case BreakerState::kClosed:
      return true;
    case BreakerState::kOpen:
      if (clock_.Now() - *opened_at_ < config_.open_duration) return false;
      state_ = BreakerState::kHalfOpen;
      probes_admitted_ = 0;
      probes_succeeded_ = 0;
      [[fallthrough]];
    case BreakerState::kHalfOpen:
      if (probes_admitted_ >= config_.half_open_probes) return false;
      ++probes_admitted_;
      return true;
  }
  return false;
}

void CircuitBreaker::RecordSuccess() {
  std::lock_guard lock(mu_);
  consecutive_failures_ = 0;
  if (state_ != BreakerState::kHalfOpen) return;
  if (++probes_succeeded_ >= config_.half_open_probes) {
    state_ = BreakerState::kClosed;
    opened_at_.reset();
    probes_admitted_ = 0;
    probes_succeeded_ = 0;
  }
}

void CircuitBreaker::RecordFailure() {
  std::lock_guard lock(mu_);
  ++consecutive_failures_;
  if (state_ == BreakerState::kHalfOpen ||
      (state_ == BreakerState::kClosed && consecutive_failures_ >= config_.failure_threshold)) {
    OpenLocked();
  }
}

void CircuitBreaker::ForceOpen() {
  std::lock_guard lock(mu_);
  OpenLocked();
}

void CircuitBreaker::ForceClosed() {
  std::lock_guard lock(mu_);
  state_ = BreakerState::kClosed;
  consecutive_failures_ = 0;
  opened_at_.reset();
  probes_admitted_ = 0;
  probes_succeeded_ = 0;
}

BreakerState CircuitBreaker::state() const {
  std::lock_guard lock(mu_);
  return state_;
}

BreakerSnapshot CircuitBreaker::Snapshot() const {
  std::lock_guard lock(mu_);
  return {state_, consecutive_failures_, opened_at_, probes_admitted_};
}

}  // namespace horizon::signal
