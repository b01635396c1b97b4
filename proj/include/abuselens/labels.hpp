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

#ifndef ABUSELENS_LABELS_HPP_
#define ABUSELENS_LABELS_HPP_

#include <array>
#include <cstddef>
#include <optional>
#include <string_view>

namespace abuselens {

// The ten sentiment labels in their fixed output order. Every vector of
// per-label values in this project is indexed by this enum.
enum class Sentiment : std::size_t {
  kOptimistic = 0,
  kThankful,
  kEmpathetic,
  kPessimistic,
  kAnxious,
  kSad,
  kAnnoyed,
  kDenial,
  kOfficialReport,
  kJoking,
};

inline constexpr std::size_t kNumSentiments = 10;

inline constexpr std::array<std::string_view, kNumSentiments> kSentimentNames = {
    "optimistic", "thankful", "empathetic",      "pessimistic", "anxious",
    "sad",        "annoyed",  "denial",          "official_report",
    "joking"};

constexpr std::size_t index_of(Sentiment s) { return static_cast<std::size_t>(s); }

constexpr std::string_view to_string(Sentiment s) { return kSentimentNames[index_of(s)]; }

std::optional<Sentiment> parse_sentiment(std::string_view name);

enum class BinaryLabel { kHinduphobic, kPositiveNeutral };

constexpr std::string_view to_string(BinaryLabel label) {
  return label == BinaryLabel::kHinduphobic ? "hinduphobic" : "positive_neutral";
}

std::optional<BinaryLabel> parse_binary_label(std::string_view name);

}  // namespace abuselens

#endif  // ABUSELENS_LABELS_HPP_
