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

#ifndef ABUSELENS_ANNOTATION_HPP_
#define ABUSELENS_ANNOTATION_HPP_

#include <chrono>
#include <cstddef>
#include <filesystem>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "abuselens/classifier.hpp"
#include "abuselens/corpus_store.hpp"
#include "abuselens/io_util.hpp"
#include "abuselens/labels.hpp"
#include "abuselens/post.hpp"

namespace abuselens {

enum class TaskStatus { kPending, kConfirmed, kOverridden, kSkipped };
std::string_view to_string(TaskStatus status);

enum class DecisionAction { kConfirm, kOverride, kSkip };
std::string_view to_string(DecisionAction action);
std::optional<DecisionAction> parse_decision_action(std::string_view name);

struct Proposal {
  BinaryLabel binary = BinaryLabel::kPositiveNeutral;
  double confidence = 0.5;
  std::vector<Sentiment> sentiments;
};

struct AnnotationTask {
  std::string post_id;
  std::string text;
  std::string country;
  std::string month;
  std::optional<Proposal> proposal;  // empty in the manual phase
  TaskStatus status = TaskStatus::kPending;
  // Set iff status != pending.
  std::string decided_by;
  std::optional<Timestamp> decided_at;
  std::optional<BinaryLabel> final_binary;
  std::vector<Sentiment> final_sentiments;

  nlohmann::json to_json() const;
  static AnnotationTask from_json(const nlohmann::json& j);
};

struct Decision {
  std::string post_id;
  DecisionAction action = DecisionAction::kConfirm;
  std::optional<BinaryLabel> binary;  // required for override
  std::vector<Sentiment> sentiments;
  std::string annotator = "anonymous";
  Timestamp at{};

  nlohmann::json to_json() const;
  // Accepts the HTTP body {binary, sentiments[], action, annotator?}.
  static Decision from_json(const nlohmann::json& j, std::string post_id);
};

struct AnnotationStats {
  std::size_t total = 0;
  std::size_t decided = 0;  // confirmed + overridden
  std::size_t confirmed = 0;
  std::size_t overridden = 0;
  std::size_t skipped = 0;
  std::size_t pending = 0;
  std::size_t leased = 0;
  // Share of decided tasks with a machine proposal whose final binary label
  // equals the proposal. Empty when no such task exists.
  std::optional<double> agreement;
  // Overridden tasks where the human changed the given label.
  std::map<std::string, std::size_t> overrides_by_label;

  nlohmann::json to_json() const;
};

// First n_manual posts get no proposal; the rest carry the backend's
// prediction. n_manual larger than the corpus is clamped with a warning.
std::vector<AnnotationTask> bootstrap_labels(std::span<const NormalizedPost> posts,
                                             const ClassifierBackend& suggester,
                                             std::size_t n_manual,
                                             double threshold = kDefaultSentimentThreshold);

void write_tasks(const std::filesystem::path& path, std::span<const AnnotationTask> tasks);
std::vector<AnnotationTask> read_tasks(const std::filesystem::path& path);

struct Lease {
  AnnotationTask task;
  std::string client;
  std::chrono::seconds expires_in{0};
};

// Task queue backed by an append-only decision log. Constructing a queue
// over an existing log replays it, so acknowledged decisions survive a
// crash; leases live in memory only and lapse on restart.
class AnnotationQueue {
 public:
  using Clock = std::function<std::chrono::steady_clock::time_point()>;

  AnnotationQueue(std::vector<AnnotationTask> tasks, std::filesystem::path decision_log,
                  std::chrono::seconds lease_timeout = std::chrono::seconds(300),
                  Clock clock = [] { return std::chrono::steady_clock::now(); });

  // Next pending task not leased to another client; a client that already
  // holds an unexpired lease gets the same task back.
  std::optional<Lease> lease_next(const std::string& client);

  // Appends the decision durably before applying it. Throws NotFoundError
  // for unknown ids, ConflictError if the task was already decided and
  // ValidationError for malformed decisions.
  AnnotationTask decide(const Decision& decision);

  AnnotationStats stats() const;
  std::vector<AnnotationTask> tasks() const;
  std::optional<AnnotationTask> task(const std::string& post_id) const;
  std::size_t replayed() const { return replayed_; }

 private:
  void apply(const Decision& d);
  void validate(const Decision& d, const AnnotationTask& t) const;

  mutable std::mutex mu_;
  std::vector<AnnotationTask> tasks_;
  std::map<std::string, std::size_t, std::less<>> index_;
  struct LeaseState {
    std::string client;
    std::chrono::steady_clock::time_point expires;
  };
  std::map<std::size_t, LeaseState> leases_;
  std::chrono::seconds lease_timeout_;
  Clock clock_;
  std::unique_ptr<DurableAppender> log_;
  std::size_t replayed_ = 0;
};

struct ExportSummary {
  std::size_t records = 0;
  std::size_t hinduphobic = 0;
  std::size_t positive_neutral = 0;
};

// Confirmed and overridden tasks only, with label_source human_verified.
std::vector<LabeledRecord> export_labeled(std::span<const AnnotationTask> tasks,
                                          ExportSummary* summary = nullptr);
void write_labeled(const std::filesystem::path& path, std::span<const LabeledRecord> records);

}  // namespace abuselens

#endif  // ABUSELENS_ANNOTATION_HPP_
