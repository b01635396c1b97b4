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

#ifndef ABUSELENS_EMBEDDED_DATA_HPP_
#define ABUSELENS_EMBEDDED_DATA_HPP_

#include <string_view>

namespace abuselens {

// Files shipped under data/, compiled in so the library runs without an
// install tree. Throws Error for an unknown name.
std::string_view embedded_resource(std::string_view name);

}  // namespace abuselens

#endif  // ABUSELENS_EMBEDDED_DATA_HPP_
