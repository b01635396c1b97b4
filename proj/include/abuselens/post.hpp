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

#ifndef ABUSELENS_POST_HPP_
#define ABUSELENS_POST_HPP_

#include <optional>
#include <string>
#include <vector>

#include "abuselens/year_month.hpp"

namespace abuselens {

struct RawPost {
  std::string id;
  std::string text;
  Timestamp timestamp{};
  std::string country;  // ISO-3166 alpha-2
  std::optional<std::string> language_hint;

  YearMonth month() const { return YearMonth::of(timestamp); }
  friend bool operator==(const RawPost&, const RawPost&) = default;
};

struct NormalizedPost {
  std::string id;
  std::vector<std::string> tokens;
  std::string normalized_text;
  std::vector<std::string> applied_rules;
  Timestamp timestamp{};
  std::string country;
  // Nothing survived normalization. Not an error.
  bool empty = false;
  // The raw text held only links (and whitespace).
  bool link_only = false;

  YearMonth month() const { return YearMonth::of(timestamp); }
};

}  // namespace abuselens

#endif  // ABUSELENS_POST_HPP_
