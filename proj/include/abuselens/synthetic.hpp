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

#ifndef ABUSELENS_SYNTHETIC_HPP_
#define ABUSELENS_SYNTHETIC_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "abuselens/post.hpp"
#include "abuselens/year_month.hpp"

namespace abuselens {

// Seeded generator for test and benchmark corpora. The same options always
// produce the same posts.
struct SyntheticOptions {
  std::size_t count = 10000;
  std::uint64_t seed = 42;
  double abusive_share = 0.4;
  YearMonth first{2020, 1};
  YearMonth last{2021, 12};
  // Extra mass placed on one month.
  YearMonth spike{2021, 4};
  double spike_share = 0.15;
};

std::vector<RawPost> generate_posts(const SyntheticOptions& options);

// CSV with the default schema: id,text,timestamp,country,language.
std::string posts_to_csv(const std::vector<RawPost>& posts);

}  // namespace abuselens

#endif  // ABUSELENS_SYNTHETIC_HPP_
