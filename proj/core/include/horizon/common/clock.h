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

#ifndef HORIZON_COMMON_CLOCK_H_
#define HORIZON_COMMON_CLOCK_H_

#include <atomic>
#include <chrono>

namespace horizon {

using Instant = std::chrono::system_clock::time_point;
using Millis = std::chrono::milliseconds;

class Clock {
 public:
  virtual ~Clock() = default;
  virtual Instant Now() const = 0;
};

class SystemClock final : public Clock {
 public:
  Instant Now() const override { return std::chrono::system_clock::now(); }

  // Process-wide instance.
  static const SystemClock& Get();
};

// A clock that only moves when told to. Safe for concurrent use.
class ManualClock final : public Clock {
 public:
  explicit ManualClock(Instant start = Instant{}) : now_(start.time_since_epoch().count()) {}

  Instant Now() const override {
    return Instant(Instant::duration(now_.load(std::memory_order_acquire)));
  }
  void Advance(Instant::duration d) { now_.fetch_add(d.count(), std::memory_order_acq_rel); }
  void Set(Instant t) { now_.store(t.time_since_epoch().count(), std::memory_order_release); }

 private:
  std::atomic<Instant::rep> now_;
};

// A point in time after which work should be abandoned.
class Deadline {
 public:
  Deadline(const Clock& clock, Millis budget) : clock_(&clock), at_(clock.Now() + budget) {}

  bool Expired() const { return clock_->Now() >= at_; }
  Millis Remaining() const {
    auto left = std::chrono::duration_cast<Millis>(at_ - clock_->Now());
    return left.count() > 0 ? left : Millis(0);
  }
  Instant at() const { return at_; }

 private:
  const Clock* clock_;
  Instant at_;
};

}  // namespace horizon

#endif  // HORIZON_COMMON_CLOCK_H_
