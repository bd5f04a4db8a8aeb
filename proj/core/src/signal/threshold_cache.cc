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

#include "horizon/signal/threshold_cache.h"

#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <spdlog/spdlog.h>

#include "horizon/common/error.h"
#include "horizon/signal/query_key.h"

namespace horizon::signal {
namespace {

std::vector<std::string_view> SplitTabs(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto tab = line.find('\t', start);
    out.push_back(line.substr(start, tab == std::string_view::npos ? tab : tab - start));
    if (tab == std::string_view::npos) break;
    start = tab + 1;
  }
  return out;
}

template <typename T>
T ParseNumber(std::string_view field, const char* name) {
  T value{};
  const auto* end = field.data() + field.size();
  auto [ptr, ec] = std::from_chars(field.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw Error(ErrorCode::kDataError, std::string("bad ") + name + " '" + std::string(field) + "'");
  }
  return value;
}

std::string_view TrimEol(std::string_view s) {
  while (!s.empty() && (s.back() == '\r' || s.back() == '\n')) s.remove_suffix(1);
  return s;
}

}  // namespace

std::string_view ProvenanceName(Provenance p) {
  switch (p) {
    case Provenance::kCache: return "cache";
    case Provenance::kBackend: return "backend";
    case Provenance::kFallback: return "fallback";
  }
  return "fallback";
}

std::optional<Provenance> ProvenanceFromName(std::string_view name) {
  if (name == "cache") return Provenance::kCache;
  if (name == "backend") return Provenance::kBackend;
  if (name == "fallback") return Provenance::kFallback;
  return std::nullopt;
}

bool ThresholdCacheEntry::Servable(Instant now) const {
  return computed_at + std::chrono::days(ttl_days) >= now;
}

std::string FormatCacheRecord(const ThresholdCacheEntry& e) {
  std::ostringstream os;
  const auto secs =
      std::chrono::duration_cast<std::chrono::seconds>(e.computed_at.time_since_epoch()).count();
  os << e.query_key << '\t' << e.t_exp.ToString() << '\t' << secs << '\t' << e.ttl_days << '\t'
     << ProvenanceName(e.source) << '\t';
  char buf[32];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), e.s_self);  // shortest round-trip form
  os << std::string_view(buf, ec == std::errc() ? static_cast<std::size_t>(end - buf) : 0);
  return os.str();
}

ThresholdCacheEntry ParseCacheRecord(std::string_view line) {
  const auto fields = SplitTabs(TrimEol(line));
  if (fields.size() != 6) {
    throw Error(ErrorCode::kDataError,
                "expected 6 fields, found " + std::to_string(fields.size()));
  }
  ThresholdCacheEntry e;
  e.query_key = std::string(fields[0]);
  if (e.query_key.empty()) throw Error(ErrorCode::kDataError, "empty query key");
  auto t = temporal::TimePoint::Parse(fields[1]);
  if (!t) throw Error(ErrorCode::kDataError, "bad t_exp '" + std::string(fields[1]) + "'");
  e.t_exp = *t;
  e.computed_at = Instant(std::chrono::seconds(ParseNumber<long long>(fields[2], "computed_at")));
  e.ttl_days = ParseNumber<int>(fields[3], "ttl_days");
  if (e.ttl_days <= 0) throw Error(ErrorCode::kDataError, "ttl_days must be positive");
  auto source = ProvenanceFromName(fields[4]);
  if (!source) throw Error(ErrorCode::kDataError, "bad source '" + std::string(fields[4]) + "'");
  e.source = *source;
  e.s_self = ParseNumber<double>(fields[5], "s_self");
  if (!(e.s_self >= 0.0 && e.s_self <= 1.0)) {
    throw Error(ErrorCode::kDataError, "s_self outside [0, 1]");
  }
  return e;
}

ThresholdCache::ThresholdCache(const Clock& clock, int ttl_days, std::string path)
    : clock_(clock), ttl_days_(ttl_days), path_(std::move(path)) {
  if (ttl_days_ <= 0) throw Error(ErrorCode::kInvalidArgument, "cache ttl must be positive");
  if (path_.empty()) return;
  std::ifstream in(path_);
  if (!in) return;  // first run
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line.front() == '#') continue;
    Replay(line);
  }
  if (load_errors_) {
    spdlog::warn("threshold cache {}: {} malformed record(s)", path_, load_errors_);
  }
}

ThresholdCache::~ThresholdCache() {
  try {
    Compact();
  } catch (const std::exception& e) {
    spdlog::error("threshold cache compaction failed: {}", e.what());
  }
}

void ThresholdCache::Replay(std::string_view line) {
  try {
    ThresholdCacheEntry e = ParseCacheRecord(line);
    std::string key = e.query_key;
    records_[key] = Record{std::move(e), ""};
  } catch (const Error& err) {
    ++load_errors_;
    const auto tab = line.find('\t');
    if (tab == std::string_view::npos || tab == 0) return;  // no usable key
    records_[std::string(line.substr(0, tab))] = Record{std::nullopt, err.what()};
  }
}

void ThresholdCache::Append(const std::string& line) {
  if (path_.empty()) return;
  const bool fresh = !std::filesystem::exists(path_);
  std::ofstream out(path_, std::ios::app);
  if (!out) throw Error(ErrorCode::kIo, "cannot append to cache file " + path_);
  if (fresh) out << kCacheHeader << '\n';
  out << line << '\n';
}

LookupResult ThresholdCache::Lookup(std::string_view query) {
  const std::string key = NormalizeQueryKey(query);
  {
    std::shared_lock lock(mu_);
    auto it = records_.find(key);
    if (it == records_.end()) return {};
    if (it->second.entry) {
      if (it->second.entry->Servable(clock_.Now())) return {LookupStatus::kHit, it->second.entry, ""};
      return {};
    }
  }
  std::unique_lock lock(mu_);
  auto it = records_.find(key);
  if (it == records_.end() || it->second.entry) return {};  // raced with a writer
  LookupResult r{LookupStatus::kCorrupt, std::nullopt, it->second.error};
  records_.erase(it);
  return r;
}

ThresholdCacheEntry ThresholdCache::Put(std::string_view query, const temporal::TimePoint& t_exp,
                                        double s_self, Provenance source) {
  ThresholdCacheEntry e;
  e.query_key = NormalizeQueryKey(query);
  e.t_exp = t_exp;
  e.computed_at = std::chrono::time_point_cast<std::chrono::seconds>(clock_.Now());
  e.ttl_days = ttl_days_;
  e.source = source;
  e.s_self = s_self;
  std::unique_lock lock(mu_);
  records_[e.query_key] = Record{e, ""};
  Append(FormatCacheRecord(e));
  return e;
}

void ThresholdCache::ApplyRecordLine(std::string_view line) {
  std::unique_lock lock(mu_);
  const std::size_t before = load_errors_;
  Replay(line);
  load_errors_ = before;
  Append(std::string(TrimEol(line)));
}

void ThresholdCache::Compact() {
  if (path_.empty()) return;
  std::unique_lock lock(mu_);
  const Instant now = clock_.Now();
  const std::string tmp = path_ + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw Error(ErrorCode::kIo, "cannot write " + tmp);
    out << kCacheHeader << '\n';
    for (const auto& [key, rec] : records_) {
      if (rec.entry && rec.entry->Servable(now)) out << FormatCacheRecord(*rec.entry) << '\n';
    }
  }
  std::filesystem::rename(tmp, path_);
}

std::size_t ThresholdCache::size() const {
  std::shared_lock lock(mu_);
  return records_.size();
}

std::vector<ThresholdCacheEntry> ThresholdCache::Entries() const {
  std::shared_lock lock(mu_);
  std::vector<ThresholdCacheEntry> out;
  for (const auto& [key, rec] : records_) {
    if (rec.entry) out.push_back(*rec.entry);
  }
  return out;
}

}  // namespace horizon::signal
