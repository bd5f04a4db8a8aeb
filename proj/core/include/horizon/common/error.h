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

#ifndef HORIZON_COMMON_ERROR_H_
#define HORIZON_COMMON_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace horizon {

enum class ErrorCode {
  kInvalidArgument,
  kDataError,
  kIo,
  // Pipeline outcomes that are answers rather than faults.
  kNoEvidence,
  kNoVerdict,
  kUnsupportedVerdict,
  // Backend faults. These count against the circuit breaker.
  kBackendTimeout,
  kBackendSchema,
  kBackendTransport,
};

std::string_view ErrorCodeName(ErrorCode code);

// True for failures that indicate an unhealthy reasoning backend.
bool IsBackendFault(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace horizon

#endif  // HORIZON_COMMON_ERROR_H_
