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

#ifndef HORIZON_SIGNAL_QUERY_KEY_H_
#define HORIZON_SIGNAL_QUERY_KEY_H_

#include <string>
#include <string_view>

namespace horizon::signal {

// Cache key for a query: Unicode lowercase, NFC, every run of Unicode
// whitespace collapsed to one ASCII space, ends trimmed. Input is UTF-8;
// invalid sequences become U+FFFD.
std::string NormalizeQueryKey(std::string_view query);

}  // namespace horizon::signal

#endif  // HORIZON_SIGNAL_QUERY_KEY_H_
