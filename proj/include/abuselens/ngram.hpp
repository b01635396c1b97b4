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

#ifndef ABUSELENS_NGRAM_HPP_
#define ABUSELENS_NGRAM_HPP_

#include <cstddef>
#include <filesystem>
#include <map>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "abuselens/post.hpp"

namespace abuselens {

class Stopwords {
 public:
  Stopwords() = default;
  explicit Stopwords(std::set<std::string, std::less<>> words) : words_(std::move(words)) {}

  static Stopwords defaults();
  // One word per line; blank lines and lines starting with '#' ignored.
  static Stopwords parse(std::string_view text);
  static Stopwords load(const std::filesystem::path& path);

  bool contains(std::string_view word) const { return words_.contains(word); }
  std::size_t size() const { return words_.size(); }

 private:
  std::set<std::string, std::less<>> words_;
};

// Tokens left after dropping stopwords and multi-word placeholders such as
// the mention marker.
std::vector<std::string_view> content_tokens(std::span<const std::string> tokens,
                                             const Stopwords& stopwords);

// Sliding window of width n (2 or 3) over the content tokens.
std::vector<std::string> extract_ngrams(const NormalizedPost& post, std::size_t n,
                                        const Stopwords& stopwords);

enum class NGramFilter { kAll, kHinduphobicOnly };
std::string_view to_string(NGramFilter filter);

struct NGramTable {
  std::size_t n = 2;
  std::string scope = "global";  // "global" or a country code
  NGramFilter filter = NGramFilter::kHinduphobicOnly;
  std::map<std::string, std::size_t> counts;

  void add(const NGramTable& other);
  std::size_t total() const;
};

using NGramCount = std::pair<std::string, std::size_t>;

// Count descending, ties in lexicographic order.
std::vector<NGramCount> topk(const NGramTable& table, std::size_t k = 10);

struct NGramTables {
  NGramTable global;
  std::map<std::string, NGramTable> by_country;
};

// Counts n-grams of the given posts per country, in parallel over
// countries, and merges them into the global table.
NGramTables count_ngrams(std::span<const NormalizedPost> posts, std::size_t n,
                         const Stopwords& stopwords, NGramFilter filter);

namespace reference {
NGramTables count_ngrams(std::span<const NormalizedPost> posts, std::size_t n,
                         const Stopwords& stopwords, NGramFilter filter);
}  // namespace reference

// CSV scope,n,ngram,count; rows ordered by scope ("global" first), then by
// topk order.
std::string ngram_csv(std::span<const NGramTables> tables);
// {"<scope>": {"2": [[ngram, count], ...], "3": [...]}}
nlohmann::json topk_json(std::span<const NGramTables> tables, std::size_t k = 10);

}  // namespace abuselens

#endif  // ABUSELENS_NGRAM_HPP_
