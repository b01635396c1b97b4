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

#ifndef ABUSELENS_KEYWORD_BACKEND_HPP_
#define ABUSELENS_KEYWORD_BACKEND_HPP_

#include <array>
#include <filesystem>
#include <string>
#include <unordered_map>
#include <vector>

#include <nlohmann/json.hpp>

#include "abuselens/classifier.hpp"
#include "abuselens/text_normalizer.hpp"

namespace abuselens {

struct KeywordTerm {
  std::string term;  // as written in the rules file, e.g. "#CoronaJihad"
  double weight = 1.0;
};

// Weighted negative/positive terms for the binary decision and cue phrases
// for the sentiment stub. Terms are matched after running them through the
// same normalizer as the posts, so "#CoronaJihad" matches "coronajihad".
struct KeywordRuleSet {
  std::vector<KeywordTerm> negative;
  std::vector<KeywordTerm> positive;
  std::array<std::vector<std::string>, kNumSentiments> sentiment_cues;

  static KeywordRuleSet defaults();
  static KeywordRuleSet from_json(const nlohmann::json& j);
  static KeywordRuleSet load(const std::filesystem::path& path);
  nlohmann::json to_json() const;

  // No term in both polarity lists; every weight > 0.
  void validate() const;
};

struct KeywordEvidence {
  double negative = 0.0;
  double positive = 0.0;
  std::vector<std::string> matched_negative;
  std::vector<std::string> matched_positive;
};

// Baseline backend: hinduphobic iff weighted negative hits exceed weighted
// positive hits (ties are positive_neutral). p(hinduphobic) is
// neg / (neg + pos), or 0.5 without evidence. Sentiment score per label is
// 1 - 0.5^hits over that label's cue phrases.
class KeywordBackend final : public ClassifierBackend {
 public:
  explicit KeywordBackend(KeywordRuleSet rules = KeywordRuleSet::defaults(),
                          const TextNormalizer& normalizer = TextNormalizer(),
                          std::string id = "keyword_rule");

  const std::string& id() const override { return id_; }
  BackendKind kind() const override { return BackendKind::kKeywordRule; }
  std::vector<ModelOutput> infer(std::span<const NormalizedPost> posts) const override;

  ModelOutput score(const NormalizedPost& post) const;
  KeywordEvidence evidence(const NormalizedPost& post) const;
  const KeywordRuleSet& rules() const { return rules_; }

 private:
  struct Phrase {
    std::vector<std::string> tokens;
    double weight = 1.0;
    int group = 0;  // -1 negative, -2 positive, 0..9 sentiment label
    std::string term;
  };

  void add_phrase(const std::string& term, double weight, int group,
                  const TextNormalizer& normalizer);
  // Calls visit(phrase) for every occurrence of every phrase in tokens.
  template <typename Visit>
  void for_each_match(const std::vector<std::string>& tokens, Visit&& visit) const;

  KeywordRuleSet rules_;
  std::string id_;
  std::vector<Phrase> phrases_;
  std::unordered_map<std::string, std::vector<std::size_t>> by_first_token_;
};

}  // namespace abuselens

#endif  // ABUSELENS_KEYWORD_BACKEND_HPP_
