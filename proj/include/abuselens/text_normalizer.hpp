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

#ifndef ABUSELENS_TEXT_NORMALIZER_HPP_
#define ABUSELENS_TEXT_NORMALIZER_HPP_

#include <cstddef>
#include <filesystem>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include <nlohmann/json.hpp>

#include "abuselens/post.hpp"

namespace abuselens {

enum class UrlPolicy { kDrop, kKeepText };
enum class HashtagPolicy { kDrop, kKeepText };

// Lookup tables and policies for post normalization. Rule application order
// is fixed: mentions, URLs, emoji, contractions/slang, hashtag unwrap,
// case-fold, punctuation strip, whitespace collapse.
struct NormalizationRules {
  // Keys are matched case-insensitively with any apostrophe variant
  // (' ’ ‘ ʼ) folded to '.
  std::map<std::string, std::string> contractions;
  std::map<std::string, std::string> emoji;
  std::map<std::string, std::string> slang;
  // Hashtag spellings with a canonical surface form (e.g. covid19 ->
  // COVID-19). Only consulted by standardize_token().
  std::map<std::string, std::string> hashtag_aliases;
  std::string mention_replacement = "[user mention]";
  UrlPolicy url_policy = UrlPolicy::kDrop;
  HashtagPolicy hashtag_policy = HashtagPolicy::kKeepText;

  // The shipped rules plus the shipped emoji extension.
  static NormalizationRules defaults();
  // Missing keys fall back to empty maps and default policies.
  static NormalizationRules from_json(const nlohmann::json& j);
  static NormalizationRules load(const std::filesystem::path& path);
  nlohmann::json to_json() const;
};

struct NormalizedText {
  std::vector<std::string> tokens;
  std::string text;
  std::vector<std::string> applied_rules;
  bool link_only = false;
};

// Compiled form of NormalizationRules. Immutable after construction and
// safe to share across threads.
class TextNormalizer {
 public:
  explicit TextNormalizer(NormalizationRules rules = NormalizationRules::defaults());

  // Throws DecodeError on malformed UTF-8.
  NormalizedText normalize_text(std::string_view text) const;
  NormalizedPost normalize(const RawPost& raw) const;

  // Single-token table lookup preserving the table's surface form, e.g.
  // "i’ll’ve" -> "I will have", "#StaySafe" -> "StaySafe".
  std::string standardize_token(std::string_view token) const;

  const NormalizationRules& rules() const { return rules_; }

 private:
  struct Word {
    std::u32string text;
    bool hashtag = false;
    bool placeholder = false;
  };

  std::u32string replace_mentions(const std::u32string& in, std::vector<std::string>* tags) const;
  std::u32string strip_urls(const std::u32string& in, std::vector<std::string>* tags,
                            bool* link_only) const;
  std::u32string map_emoji(const std::u32string& in, std::vector<std::string>* tags) const;
  std::vector<Word> split_words(const std::u32string& in, std::vector<std::string>* tags) const;
  void expand_word(const std::u32string& word, int depth, std::vector<std::string>* tokens,
                   std::vector<std::string>* tags) const;

  NormalizationRules rules_;
  std::u32string mention_literal_;
  std::unordered_map<std::u32string, std::u32string> contractions_;
  std::unordered_map<std::u32string, std::u32string> slang_;
  std::unordered_map<std::u32string, std::u32string> ascii_emoticons_;
  std::unordered_map<std::u32string, std::u32string> unicode_emoji_;
  std::size_t max_emoji_length_ = 0;
};

// Convenience wrapper; prefer reusing a TextNormalizer for batches.
NormalizedPost normalize(const RawPost& raw, const NormalizationRules& rules);

// OpenMP-parallel batch normalization. Output order matches input order.
// If any post fails to decode, the error of the lowest-index failing post is
// rethrown after the loop.
std::vector<NormalizedPost> normalize_batch(std::span<const RawPost> posts,
                                            const TextNormalizer& normalizer);

struct DedupResult {
  std::vector<NormalizedPost> posts;
  std::size_t removed = 0;
};

// Keeps the first post for every distinct normalized_text.
DedupResult dedup(std::vector<NormalizedPost> posts);

struct SpamHeuristics {
  std::size_t min_tokens = 3;
  double near_duplicate_jaccard = 0.9;
  bool drop_link_only = true;
};

enum class SpamReason { kLinkOnly, kTooShort, kNearDuplicate };
std::string_view to_string(SpamReason reason);

struct SpamFilterResult {
  std::vector<NormalizedPost> kept;
  std::vector<NormalizedPost> discarded;
  std::vector<SpamReason> reasons;  // parallel to discarded
};

// Order dependent: a post is a near-duplicate when its token-set Jaccard
// with an already kept post reaches the threshold. Uses prefix filtering so
// only candidate pairs sharing a rare token are compared.
SpamFilterResult spam_filter(std::vector<NormalizedPost> posts,
                             const SpamHeuristics& heuristics = {});

namespace reference {

std::vector<NormalizedPost> normalize_batch(std::span<const RawPost> posts,
                                            const TextNormalizer& normalizer);

}  // namespace reference

double token_set_jaccard(const std::vector<std::string>& a, const std::vector<std::string>& b);

}  // namespace abuselens

#endif  // ABUSELENS_TEXT_NORMALIZER_HPP_
