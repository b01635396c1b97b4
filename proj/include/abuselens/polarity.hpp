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

#ifndef ABUSELENS_POLARITY_HPP_
#define ABUSELENS_POLARITY_HPP_

#include <array>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "abuselens/classifier.hpp"
#include "abuselens/labels.hpp"
#include "abuselens/post.hpp"
#include "abuselens/year_month.hpp"

namespace abuselens {

struct SentimentWeights {
  std::array<double, kNumSentiments> weights{};

  static SentimentWeights defaults();
  // {label: integer}; labels not listed keep their default weight.
  static SentimentWeights from_json(const nlohmann::json& j);
  static SentimentWeights load(const std::filesystem::path& path);
  nlohmann::json to_json() const;

  double operator[](Sentiment s) const { return weights[index_of(s)]; }
  double max_abs() const;
  // Throws ValidationError when every weight is 0.
  void validate() const;
};

enum class PolarityMethod { kLexicon, kCustomWeight };
std::string_view to_string(PolarityMethod method);

struct PolarityScore {
  double value = 0.0;
  PolarityMethod method = PolarityMethod::kLexicon;
};

class PolarityLexicon {
 public:
  PolarityLexicon() = default;
  explicit PolarityLexicon(std::map<std::string, double> entries);

  static PolarityLexicon defaults();
  // {"words": {word: value}}; values must lie in [-1, 1].
  static PolarityLexicon from_json(const nlohmann::json& j);
  static PolarityLexicon load(const std::filesystem::path& path);

  std::optional<double> lookup(std::string_view word) const;
  std::size_t size() const { return entries_.size(); }

 private:
  std::map<std::string, double, std::less<>> entries_;
};

// Mean of the matched tokens' values; 0 when nothing matches.
PolarityScore lexicon_polarity(const NormalizedPost& post, const PolarityLexicon& lexicon);
// Sum of active weights over max|w| times the active count; 0 when no label
// is active.
PolarityScore custom_polarity(const SentimentVector& v, const SentimentWeights& w);

struct ScoredPost {
  std::string country;
  YearMonth month;
  double value = 0.0;
};

struct MonthlyPolarity {
  std::string country;  // "ALL" for the pooled series
  YearMonth month;
  PolarityMethod method = PolarityMethod::kLexicon;
  std::optional<double> mean;  // empty for months without posts
  std::size_t n = 0;
};

// Per country plus ALL, every month between the earliest and latest scored
// month. Countries are sorted, ALL comes last.
std::vector<MonthlyPolarity> monthly_mean_polarity(std::span<const ScoredPost> posts,
                                                   PolarityMethod method);

// CSV country,month,method,mean_polarity,n (empty mean_polarity for gaps).
std::string monthly_polarity_csv(std::span<const MonthlyPolarity> rows);

}  // namespace abuselens

#endif  // ABUSELENS_POLARITY_HPP_
