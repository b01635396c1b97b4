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

#ifndef ABUSELENS_AGGREGATOR_HPP_
#define ABUSELENS_AGGREGATOR_HPP_

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "abuselens/classifier.hpp"
#include "abuselens/corpus_store.hpp"
#include "abuselens/labels.hpp"
#include "abuselens/post.hpp"
#include "abuselens/year_month.hpp"

namespace abuselens {

inline constexpr char kAllCountries[] = "ALL";
inline constexpr char kUnknownCountry[] = "??";

// One classified post with the fields the analytics need.
struct AnalyzedPost {
  std::string id;
  std::string country;
  YearMonth month;
  BinaryLabel binary = BinaryLabel::kPositiveNeutral;
  SentimentVector sentiment;
};

// Pairs posts with predictions by id. Throws ValidationError if a post has
// no prediction.
std::vector<AnalyzedPost> join_predictions(std::span<const NormalizedPost> posts,
                                           std::span<const Classification> predictions);

enum class AnalysisFilter { kHinduphobicOnly, kAll };
std::vector<AnalyzedPost> apply_filter(std::span<const AnalyzedPost> posts, AnalysisFilter filter);

struct MonthlySeries {
  std::string country;  // or ALL
  std::string kind = "count";
  std::vector<YearMonth> months;  // strictly increasing, contiguous
  std::vector<double> values;

  double total() const;
};

struct MonthlyCounts {
  std::map<std::string, MonthlySeries> by_country;
  MonthlySeries all;
  std::size_t total = 0;
};

// Posts whose country is not in `countries` go to the "??" bucket with a
// warning. An empty set accepts every country. All series share the same
// month range, zero-filled.
MonthlyCounts monthly_counts(std::span<const AnalyzedPost> posts,
                             const std::set<std::string>& countries = default_countries());

struct LabelCountDistribution {
  std::array<std::size_t, 4> counts{};  // 0, 1, 2, 3+ active labels
  std::array<double, 4> percent{};
  std::size_t total = 0;
};

// Throws ValidationError("empty corpus") on empty input.
LabelCountDistribution label_count_distribution(std::span<const SentimentVector> sentiments);

struct SentimentTotals {
  std::vector<Sentiment> labels;  // included labels in label order
  std::map<Sentiment, std::size_t> counts;
  std::map<Sentiment, double> percent;  // share of all included activations
  std::map<std::string, std::map<Sentiment, double>> percent_by_country;
};

SentimentTotals sentiment_totals(std::span<const AnalyzedPost> posts,
                                 const std::set<Sentiment>& exclude = {});

struct CooccurrenceMatrix {
  std::string period;
  std::array<std::array<std::size_t, kNumSentiments>, kNumSentiments> counts{};

  // counts[i][j] / counts[i][i]; rows with an empty diagonal are all 0.
  std::array<std::array<double, kNumSentiments>, kNumSentiments> normalized() const;
  bool operator==(const CooccurrenceMatrix&) const = default;
};

CooccurrenceMatrix cooccurrence(std::span<const SentimentVector> sentiments,
                                const std::string& period = "all");

namespace reference {
CooccurrenceMatrix cooccurrence(std::span<const SentimentVector> sentiments,
                                const std::string& period = "all");
}  // namespace reference

// One matrix per calendar year present, followed by "all".
std::vector<CooccurrenceMatrix> cooccurrence_by_year(std::span<const AnalyzedPost> posts);

struct AlignedMonth {
  YearMonth month;
  double series_value = 0.0;
  double cases = 0.0;
};

struct Correlation {
  double r = 0.0;
  std::vector<AlignedMonth> aligned;
  std::vector<YearMonth> excluded;  // months in only one of the inputs
};

// Pearson r over overlapping months. Throws ValidationError when fewer than
// three months overlap or either side has zero variance.
Correlation correlate_with_cases(const MonthlySeries& series, const CaseSeries& cases);

double pearson(std::span<const double> x, std::span<const double> y);

// Plot-data writers.
std::string monthly_counts_csv(const MonthlyCounts& counts);
std::string label_distribution_csv(const LabelCountDistribution& dist);
std::string sentiment_totals_csv(const SentimentTotals& totals);
std::string sentiment_by_country_csv(const SentimentTotals& totals);
std::string cooccurrence_csv(std::span<const CooccurrenceMatrix> matrices);
nlohmann::json correlation_json(const Correlation& c);

}  // namespace abuselens

#endif  // ABUSELENS_AGGREGATOR_HPP_
