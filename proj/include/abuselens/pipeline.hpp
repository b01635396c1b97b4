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

#ifndef ABUSELENS_PIPELINE_HPP_
#define ABUSELENS_PIPELINE_HPP_

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "abuselens/aggregator.hpp"
#include "abuselens/classifier.hpp"
#include "abuselens/corpus_store.hpp"
#include "abuselens/error.hpp"
#include "abuselens/text_normalizer.hpp"

namespace abuselens {

enum class Stage { kIngest, kNormalize, kClassify, kAnalyze, kExport };
inline constexpr std::array<Stage, 5> kAllStages = {Stage::kIngest, Stage::kNormalize,
                                                    Stage::kClassify, Stage::kAnalyze,
                                                    Stage::kExport};
std::string_view to_string(Stage stage);
std::optional<Stage> parse_stage(std::string_view name);

struct PipelineConfig {
  std::filesystem::path corpus;  // CSV/JSONL file, or an ingested corpus directory
  InputFormat format = InputFormat::kCsv;
  SchemaMap schema;
  std::set<std::string> countries = default_countries();
  std::string name = "corpus";
  std::optional<std::filesystem::path> rules;
  ModelBackendDescriptor backend;
  double threshold = kDefaultSentimentThreshold;
  std::optional<std::filesystem::path> weights;
  std::optional<std::filesystem::path> lexicon;
  std::optional<std::filesystem::path> stopwords;
  std::optional<std::filesystem::path> cases;
  bool fill_zero = false;
  AnalysisFilter filter = AnalysisFilter::kHinduphobicOnly;
  std::set<Sentiment> exclude_from_totals = {Sentiment::kOfficialReport};
  bool drop_duplicates = true;
  SpamHeuristics spam;
  std::size_t top_k = 10;
  std::filesystem::path output = "output";
  std::uint64_t seed = 0;
  std::vector<Stage> stages{kAllStages.begin(), kAllStages.end()};
  std::string run_id;  // empty: derived from the inputs

  // Relative paths in the file are resolved against `base_dir`.
  static PipelineConfig from_json(const nlohmann::json& j, const std::filesystem::path& base_dir = {});
  static PipelineConfig load(const std::filesystem::path& path);
  nlohmann::json to_json() const;

  // Referenced paths must exist and the stages must be a non-empty prefix of
  // ingest, normalize, classify, analyze, export. Throws ValidationError.
  void validate() const;
};

struct StageRecord {
  Stage stage = Stage::kIngest;
  double seconds = 0.0;
  std::map<std::string, std::string> outputs;  // relative path -> SHA-256
};

struct RunManifest {
  std::string run_id;
  std::uint64_t seed = 0;
  std::string config_digest;
  std::string input_digest;
  std::vector<StageRecord> stages;
  std::string digest;  // over every stage output digest; timings excluded

  nlohmann::json to_json() const;
  static RunManifest from_json(const nlohmann::json& j);
};

class StageError : public Error {
 public:
  StageError(Stage stage, const std::string& message);
  Stage stage() const { return stage_; }

 private:
  Stage stage_;
};

// Runs the configured stages into <output>/<run-id>/. A new run never
// reuses an existing directory: a clashing derived id gets a numeric
// suffix. When `resume` names an existing run, completed stages are kept
// and the remaining ones run. Stage failures throw StageError after
// recording the completed stages in run_manifest.json.
RunManifest run_pipeline(const PipelineConfig& config, const std::string& resume = {});

// Normalized-post JSONL used between stages.
nlohmann::json normalized_to_json(const NormalizedPost& post);
NormalizedPost normalized_from_json(const nlohmann::json& j);

}  // namespace abuselens

#endif  // ABUSELENS_PIPELINE_HPP_
