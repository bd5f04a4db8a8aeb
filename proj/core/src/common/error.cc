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

#include "horizon/common/error.h"

namespace horizon {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "invalid_argument";
    case ErrorCode::kDataError: return "data_error";
    case ErrorCode::kIo: return "io";
    case ErrorCode::kNoEvidence: return "no_evidence";
    case ErrorCode::kNoVerdict: return "no_verdict";
    case ErrorCode::kUnsupportedVerdict: return "unsupported_verdict";
    case ErrorCode::kBackendTimeout: return "backend_timeout";
    case ErrorCode::kBackendSchema: return "backend_schema";
    case ErrorCode::kBackendTransport: return "backend_transport";
  }
  return "unknown";
}

bool IsBackendFault(ErrorCode code) {
  return code == ErrorCode::kBackendTimeout ||
         code == ErrorCode::kBackendSchema ||
         code == ErrorCode::kBackendTransport;
}

}  // namespace horizon
