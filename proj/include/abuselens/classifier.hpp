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

#ifndef ABUSELENS_CLASSIFIER_HPP_
#define ABUSELENS_CLASSIFIER_HPP_

#include <array>
#include <cstddef>
#include <filesystem>
#include <functional>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "abuselens/corpus_store.hpp"
#include "abuselens/labels.hpp"
#include "abuselens/post.hpp"

namespace abuselens {

inline constexpr double kDefaultSentimentThreshold = 0.5;

// Per-post activation over the ten sentiment labels.
struct SentimentVector {
  std::array<double, kNumSentiments> scores{};
  std::array<bool, kNumSentiments> active{};

  // active[i] = scores[i] >= threshold. Throws ValidationError if a score is
  // outside [0, 1] or NaN.
  static SentimentVector from_scores(const std::array<double, kNumSentiments>& scores,
                                     double threshold = kDefaultSentimentThreshold);
  // Scores 1.0 for the listed labels, 0.0 elsewhere.
  static SentimentVector from_labels(std::span<const Sentiment> labels);

  bool is_active(Sentiment s) const { return active[index_of(s)]; }
  std::size_t active_count() const;
  std::vector<Sentiment> active_labels() const;
};

struct BinaryPrediction {
  BinaryLabel label = BinaryLabel::kPositiveNeutral;
  double confidence = 0.5;
  std::string backend_id;
};

// Raw backend output for one post.
struct ModelOutput {
  double hinduphobic_probability = 0.5;
  std::array<double, kNumSentiments> sentiment_scores{};
};

enum class BackendKind { kKeywordRule, kPortableModelFile, kRemoteHttp };
std::string_view to_string(BackendKind kind);

struct ModelBackendDescriptor {
  BackendKind kind = BackendKind::kKeywordRule;
  // Rules file (keyword_rule, optional), model file (portable_model_file)
  // or base URL (remote_http).
  std::string location;
  std::string id;
  std::size_t max_tokens = 0;  // 0 = unlimited
  std::string vocabulary_id;
  std::size_t binary_outputs = 1;
  std::size_t sentiment_outputs = kNumSentiments;
  int timeout_seconds = 30;

  // Throws ValidationError when the declared output arity does not match
  // one binary output plus ten sentiment outputs.
  void validate() const;
  nlohmann::json to_json() const;
  static ModelBackendDescriptor from_json(const nlohmann::json& j);
};

// Backends are immutable once constructed and shareable across threads.
class ClassifierBackend {
 public:
  virtual ~ClassifierBackend() = default;
  virtual const std::string& id() const = 0;
  virtual BackendKind kind() const = 0;
  // Maximum number of tokens the backend accepts; 0 = unlimited.
  virtual std::size_t max_tokens() const { return 0; }
  // One output per input post, same order.
  virtual std::vector<ModelOutput> infer(std::span<const NormalizedPost> posts) const = 0;
};

std::unique_ptr<ClassifierBackend> make_backend(const ModelBackendDescriptor& descriptor);

BinaryPrediction to_binary_prediction(const ModelOutput& output, const std::string& backend_id);

BinaryPrediction classify_binary(const NormalizedPost& post, const ClassifierBackend& backend);
SentimentVector classify_sentiment(const NormalizedPost& post, const ClassifierBackend& backend,
                                   double threshold = kDefaultSentimentThreshold);

struct Classification {
  std::string id;
  BinaryPrediction binary;
  SentimentVector sentiment;
};

// Batched classification. Local backends are evaluated with an
// OpenMP-parallel loop over fixed-size chunks; output order matches input.
std::vector<Classification> classify_batch(std::span<const NormalizedPost> posts,
                                           const ClassifierBackend& backend,
                                           double threshold = kDefaultSentimentThreshold);

namespace reference {
std::vector<Classification> classify_batch(std::span<const NormalizedPost> posts,
                                           const ClassifierBackend& backend,
                                           double threshold = kDefaultSentimentThreshold);
}  // namespace reference

// JSONL prediction record: {id, binary, confidence, sentiment_scores[10]}.
nlohmann::json prediction_to_json(const Classification& c);
Classification prediction_from_json(const nlohmann::json& j,
                                    double threshold = kDefaultSentimentThreshold);

using NormalizedPartitions = std::map<PartitionKey, std::vector<NormalizedPost>>;

struct ClassifyProgress {
  std::size_t partitions_done = 0;
  std::size_t partitions_total = 0;
  std::size_t records_done = 0;
};

struct ClassifyCorpusReport {
  std::size_t records = 0;
  std::size_t partitions_written = 0;
  std::size_t partitions_resumed = 0;
  double seconds = 0.0;
  double posts_per_second = 0.0;
  std::string digest;  // SHA-256 over all prediction files in partition order
};

// Writes <out_dir>/<CC>/<YYYY-MM>.jsonl per partition and records completed
// partitions in <out_dir>/checkpoint.json after each durable write. A rerun
// over the same directory skips partitions already in the checkpoint.
ClassifyCorpusReport classify_corpus(
    const NormalizedPartitions& partitions, const ClassifierBackend& backend,
    const std::filesystem::path& out_dir, double threshold = kDefaultSentimentThreshold,
    const std::function<void(const ClassifyProgress&)>& on_progress = {});

// Reads every partition file listed in the checkpoint, in partition order.
std::vector<Classification> load_predictions(const std::filesystem::path& out_dir,
                                             double threshold = kDefaultSentimentThreshold);

}  // namespace abuselens

#endif  // ABUSELENS_CLASSIFIER_HPP_
