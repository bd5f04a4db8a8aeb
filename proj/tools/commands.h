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

#ifndef HORIZON_TOOLS_COMMANDS_H_
#define HORIZON_TOOLS_COMMANDS_H_

#include <optional>
#include <ostream>
#include <string>

#include "horizon/common/error.h"
#include "horizon/service/config.h"

namespace horizon::tools {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitData = 2;
inline constexpr int kExitBackend = 3;

struct CommonArgs {
  service::Config config;
  std::string corpus;  // directory holding documents.jsonl, or a .jsonl file
  std::string out;
};

struct QueryArgs {
  std::string query;
  std::string search_time;  // YYYY-MM-DD; empty means today (UTC)
};

int RunExtract(const CommonArgs& common, const QueryArgs& q, std::ostream& out);
int RunInfer(const CommonArgs& common, const QueryArgs& q, std::ostream& out);
int RunEval(const CommonArgs& common, bool include_rankings, const std::string& save_corpus,
            std::ostream& out);
int RunCacheBuild(const CommonArgs& common, std::ostream& out);
int RunServe(const CommonArgs& common);

// Maps a library error to the process exit code.
int ExitCodeFor(ErrorCode code);

}  // namespace horizon::tools

#endif  // HORIZON_TOOLS_COMMANDS_H_
