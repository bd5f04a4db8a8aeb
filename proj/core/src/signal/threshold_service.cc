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

#include "horizon/signal/threshold_service.h"

#include <spdlog/spdlog.h>

#include "horizon/common/error.h"

namespace horizon::signal {
namespace {

bool IsNoEvidenceOutcome(ErrorCode code) {
  return code == ErrorCode::kNoEvidence || code == ErrorCode::kNoVerdict ||
         code == ErrorCode::kUnsupportedVerdict;
}

}  // namespace

ThresholdService::ThresholdService(std::shared_ptr<ThresholdSource> source,
                                   std::shared_ptr<ThresholdCache> cache,
                                   std::shared_ptr<CircuitBreaker> breaker, const Clock& clock,
                                   ThresholdServiceOptions options)
    : source_(std::move(source)),
      cache_(std::move(cache)),
      breaker_(std::move(breaker)),
      clock_(clock),
      options_(options) {
  if (!source_ || !cache_ || !breaker_) {
    throw Error(ErrorCode::kInvalidArgument, "threshold service needs source, cache and breaker");
  }
}

ThresholdResult ThresholdService::Fallback(std::string reason) {
  fallbacks_.fetch_add(1, std::memory_order_relaxed);
  spdlog::debug("threshold fallback: {}", reason);
  return {std::nullopt, Provenance::kFallback, 0.0, std::move(reason)};
}

ThresholdResult ThresholdService::GetThreshold(const ThresholdRequest& request) {
  requests_.fetch_add(1, std::memory_order_relaxed);
  try {
    LookupResult hit = cache_->Lookup(request.query);
    if (hit.status == LookupStatus::kHit) {
      cache_hits_.fetch_add(1, std::memory_order_relaxed);
      return {hit.entry->t_exp, Provenance::kCache, hit.entry->s_self, ""};
    }
    if (hit.status == LookupStatus::kCorrupt) {
      breaker_->RecordFailure();
      return Fallback("corrupt cache record: " + hit.error);
    }
  } catch (const std::exception& e) {
    breaker_->RecordFailure();
    return Fallback(std::string("cache lookup failed: ") + e.what());
  }

  if (!breaker_->Allow()) return Fallback("circuit breaker open");

  ComputedThreshold computed;
  try {
    source_calls_.fetch_add(1, std::memory_order_relaxed);
    const Deadline deadline(clock_, options_.deadline);
    computed = source_->Compute(request, deadline);
    if (deadline.Expired()) throw Error(ErrorCode::kBackendTimeout, "deadline exceeded");
  } catch (const Error& e) {
    if (IsNoEvidenceOutcome(e.code())) {
      breaker_->RecordSuccess();
    } else {
      breaker_->RecordFailure();
    }
    return Fallback(std::string(ErrorCodeName(e.code())) + ": " + e.what());
  } catch (const std::exception& e) {
    breaker_->RecordFailure();
    return Fallback(std::string("unexpected: ") + e.what());
  }

  if (!SanityCheck(computed.t_exp, request.search_time, options_.sanity)) {
    breaker_->RecordFailure();
    return Fallback("sanity check rejected " + computed.t_exp.ToString());
  }
  breaker_->RecordSuccess();
  try {
    cache_->Put(request.query, computed.t_exp, computed.s_self, Provenance::kBackend);
  } catch (const std::exception& e) {
    spdlog::warn("threshold cache write failed: {}", e.what());
  }
  return {computed.t_exp, Provenance::kBackend, computed.s_self, ""};
}

ExpirySignal ThresholdService::SignalFor(const ThresholdResult& threshold,
                                         const temporal::TimePoint& doc_time) const {
  ExpirySignal s;
  s.provenance = threshold.provenance;
  s.breaker_state = breaker_->state();
  if (threshold.provenance != Provenance::kFallback && threshold.t_exp) {
    s.t_exp_used = threshold.t_exp;
    s.f_exp = ExpiryFlag(doc_time, *threshold.t_exp);
  }
  return s;
}

ExpirySignal ThresholdService::MakeSignal(const ThresholdRequest& request,
                                          const temporal::TimePoint& doc_time) {
  return SignalFor(GetThreshold(request), doc_time);
}

ExpirySignal ThresholdService::MakeSignal(const ThresholdRequest& request,
                                          const extraction::Document& doc,
                                          TimeFactorPolicy policy,
                                          const ContentTimeEstimator* estimator) {
  ThresholdResult threshold = GetThreshold(request);
  return SignalFor(threshold, DocumentTimeFactor(doc, policy, estimator));
}

ThresholdServiceStats ThresholdService::stats() const {
  return {requests_.load(), cache_hits_.load(), source_calls_.load(), fallbacks_.load()};
}

}  // namespace horizon::signal
