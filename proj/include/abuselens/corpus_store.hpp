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

#ifndef ABUSELENS_CORPUS_STORE_HPP_
#define ABUSELENS_CORPUS_STORE_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "abuselens/labels.hpp"
#include "abuselens/post.hpp"
#include "abuselens/year_month.hpp"

namespace abuselens {

// The six countries of the global dataset.
const std::set<std::string>& default_countries();

struct PartitionKey {
  std::string country;
  YearMonth month;
  friend auto operator<=>(const PartitionKey&, const PartitionKey&) = default;
};

struct PartitionInfo {
  PartitionKey key;
  std::size_t count = 0;
  std::string file;  // relative to the corpus directory
};

struct Manifest {
  std::string name;
  std::string source;
  std::optional<Timestamp> first_timestamp;
  std::optional<Timestamp> last_timestamp;
  std::vector<std::string> countries;
  std::size_t record_count = 0;
  std::vector<PartitionInfo> partitions;

  nlohmann::json to_json() const;
  static Manifest from_json(const nlohmann::json& j);
  friend bool operator==(const Manifest& a, const Manifest& b);
};

// Posts partitioned by (country, month). Insertion order is kept within a
// partition.
class Corpus {
 public:
  Corpus() = default;
  Corpus(std::string name, std::string source);

  void add(RawPost post);
  std::size_t size() const { return size_; }
  bool empty() const { return size_ == 0; }
  const std::map<PartitionKey, std::vector<RawPost>>& partitions() const { return partitions_; }

  // Posts in partition order.
  std::vector<RawPost> posts() const;
  Manifest manifest() const;

  // Partition sum equals size and every record sits in its own partition.
  // Throws ValidationError otherwise.
  void check_conservation() const;

  const std::string& name() const { return name_; }
  const std::string& source() const { return source_; }

 private:
  std::string name_;
  std::string source_;
  std::map<PartitionKey, std::vector<RawPost>> partitions_;
  std::size_t size_ = 0;
};

enum class InputFormat { kCsv, kJsonl };
std::optional<InputFormat> parse_input_format(std::string_view name);

// Column (CSV) or field (JSONL) names for the required post attributes.
struct SchemaMap {
  std::string id = "id";
  std::string text = "text";
  std::string timestamp = "timestamp";
  std::string country = "country";
  std::string language = "language";

  // "id=tweet_id,text=content"; unspecified keys keep their defaults.
  static SchemaMap parse(std::string_view mapping);
};

struct Reject {
  std::size_t line = 0;
  std::string reason;
  std::string raw;
};

struct IngestOptions {
  InputFormat format = InputFormat::kCsv;
  SchemaMap schema;
  // Empty set accepts any two-letter uppercase code.
  std::set<std::string> countries = default_countries();
  std::string name;
};

struct IngestResult {
  Corpus corpus;
  std::vector<Reject> rejects;
};

// Invalid rows are collected in `rejects`; a missing required column
// throws SchemaError.
IngestResult ingest(const std::filesystem::path& path, const IngestOptions& options);

// Layout: <root>/<name>/manifest.json, <root>/<name>/<CC>/<YYYY-MM>.jsonl,
// <root>/<name>/rejects.jsonl. Every file is written atomically.
std::filesystem::path write_corpus(const Corpus& corpus, const std::vector<Reject>& rejects,
                                   const std::filesystem::path& root);

// Reads a corpus directory and verifies it against its manifest.
Corpus load_corpus(const std::filesystem::path& dir);

// Re-exports the records with the default schema.
void export_corpus(const Corpus& corpus, const std::filesystem::path& path, InputFormat format);

nlohmann::json post_to_json(const RawPost& post);
RawPost post_from_json(const nlohmann::json& j);

struct CaseSeries {
  std::string country;
  std::vector<YearMonth> months;       // contiguous, increasing
  std::vector<std::int64_t> counts;    // parallel to months
};

// CSV with columns country, month, cases. Negative counts, duplicate months
// and (unless fill_zero) gaps are errors.
std::map<std::string, CaseSeries> load_cases(const std::filesystem::path& path,
                                             bool fill_zero = false);

struct LabeledRecord {
  enum class Source { kHuman, kMachine, kHumanVerified };
  std::string id;
  std::optional<BinaryLabel> binary_label;
  std::vector<Sentiment> sentiment_labels;
  Source label_source = Source::kMachine;

  nlohmann::json to_json() const;
  static LabeledRecord from_json(const nlohmann::json& j);
};

std::string_view to_string(LabeledRecord::Source source);

}  // namespace abuselens

#endif  // ABUSELENS_CORPUS_STORE_HPP_
