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

#ifndef HORIZON_SIGNAL_THRESHOLD_CACHE_H_
#define HORIZON_SIGNAL_THRESHOLD_CACHE_H_

#include <map>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <vector>

#include "horizon/common/clock.h"
#include "horizon/temporal/time_point.h"

namespace horizon::signal {

enum class Provenance { kCache, kBackend, kFallback };

std::string_view ProvenanceName(Provenance p);
std::optional<Provenance> ProvenanceFromName(std::string_view name);

struct ThresholdCacheEntry {
  std::string query_key;
  temporal::TimePoint t_exp = temporal::TimePoint::Year(1970);
  Instant computed_at;
  int ttl_days = 7;
  // Where the threshold originally came from.
  Provenance source = Provenance::kBackend;
  double s_self = 0.0;

  // computed_at + ttl >= now
  bool Servable(Instant now) const;

  bool operator==(const ThresholdCacheEntry&) const = default;
};

// One record per line, tab separated, after a "# horizon threshold cache v1"
// header:
//   query_key  t_exp  computed_at_unix_seconds  ttl_days  source  s_self
std::string FormatCacheRecord(const ThresholdCacheEntry& entry);
// Throws Error(kDataError) naming the first bad field.
ThresholdCacheEntry ParseCacheRecord(std::string_view line);

inline constexpr std::string_view kCacheHeader = "# horizon threshold cache v1";

enum class LookupStatus { kHit, kMiss, kCorrupt };

struct LookupResult {
  LookupStatus status = LookupStatus::kMiss;
  std::optional<ThresholdCacheEntry> entry;  // set on kHit
  std::string error;                         // set on kCorrupt
};

// Query-keyed threshold dictionary with TTL. Readers run concurrently;
// writers are serialized. With a backing file the cache replays it at
// construction (later records win), appends every Put and rewrites the file
// with only servable entries on Compact() and destruction.
//
// A record that fails to parse stays in the map as corrupt under its key:
// the next lookup for that key reports kCorrupt and evicts it.
class ThresholdCache {
 public:
  ThresholdCache(const Clock& clock, int ttl_days, std::string path = "");
  ~ThresholdCache();
  ThresholdCache(const ThresholdCache&) = delete;
  ThresholdCache& operator=(const ThresholdCache&) = delete;

  // `query` is normalized with NormalizeQueryKey.
  LookupResult Lookup(std::string_view query);
  // Stores a threshold computed now, with the cache's TTL.
  ThresholdCacheEntry Put(std::string_view query, const temporal::TimePoint& t_exp, double s_self,
                          Provenance source = Provenance::kBackend);
  // Applies one record line as if replayed from the file; also appended to
  // the file. Used to rebuild caches and to inject corrupt records in tests.
  void ApplyRecordLine(std::string_view line);

  void Compact();

  std::size_t size() const;
  int ttl_days() const { return ttl_days_; }
  // Malformed lines seen while loading the backing file.
  std::size_t load_errors() const { return load_errors_; }
  std::vector<ThresholdCacheEntry> Entries() const;

 private:
  struct Record {
    std::optional<ThresholdCacheEntry> entry;
    std::string error;
  };

  void Replay(std::string_view line);
  void Append(const std::string& line);

  const Clock& clock_;
  int ttl_days_;
  std::string path_;
  mutable std::shared_mutex mu_;
  std::map<std::string, Record> records_;
  std::size_t load_errors_ = 0;
};

}  // namespace horizon::signal

#endif  // HORIZON_SIGNAL_THRESHOLD_CACHE_H_
