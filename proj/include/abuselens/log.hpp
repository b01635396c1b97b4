// Copyright 2026 The AbuseLens Authors.
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

#ifndef ABUSELENS_LOG_HPP_
#define ABUSELENS_LOG_HPP_

#include <functional>
#include <string_view>

namespace abuselens::log {

enum class Level { kInfo, kWarning, kError };

using Sink = std::function<void(Level, std::string_view)>;

// Replaces the process-wide sink (default: stderr, info suppressed unless
// verbose). Returns the previous sink.
Sink set_sink(Sink sink);
void set_verbose(bool verbose);

void info(std::string_view message);
void warn(std::string_view message);
void error(std::string_view message);

}  // namespace abuselens::log

#endif  // ABUSELENS_LOG_HPP_
