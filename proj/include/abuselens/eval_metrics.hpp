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

#ifndef ABUSELENS_EVAL_METRICS_HPP_
#define ABUSELENS_EVAL_METRICS_HPP_

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "abuselens/classifier.hpp"
#include "abuselens/corpus_store.hpp"
#include "abuselens/labels.hpp"

namespace abuselens {

// Rows are samples, columns are labels. All rows must have the same width.
using LabelMatrix = std::vector<std::vector<bool>>;
using ScoreMatrix = std::vector<std::vector<double>>;

struct ClassMetrics {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  std::size_t support = 0;
};

// Macro averaged over the two classes; per-class values are kept so micro or
// weighted averages can be rebuilt.
struct BinaryMetrics {
  double accuracy = 0.0;
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;  // harmonic mean of macro precision and macro recall
  ClassMetrics hinduphobic;
  ClassMetrics positive_neutral;
};

BinaryMetrics binary_metrics(std::span<const BinaryLabel> preds, std::span<const BinaryLabel> golds);

double hamming_loss(const LabelMatrix& y_true, const LabelMatrix& y_pred);
double jaccard_samples(const LabelMatrix& y_true, const LabelMatrix& y_pred);
// Samples without any true label are skipped with a warning.
double lrap(const LabelMatrix& y_true, const ScoreMatrix& y_score);

enum class Average { kMacro, kMicro };
double f1_multilabel(const LabelMatrix& y_true, const LabelMatrix& y_pred, Average average);

struct MultiLabelMetrics {
  double hamming_loss = 0.0;
  double jaccard_samples = 0.0;
  double lrap = 0.0;
  double f1_macro = 0.0;
  double f1_micro = 0.0;
};

MultiLabelMetrics multilabel_metrics(const LabelMatrix& y_true, const LabelMatrix& y_pred,
                                     const ScoreMatrix& y_score);

LabelMatrix to_label_matrix(std::span<const SentimentVector> vectors);
ScoreMatrix to_score_matrix(std::span<const SentimentVector> vectors);

struct MeanStd {
  double mean = 0.0;
  double std = 0.0;  // sample standard deviation; 0 when n == 1
};

MeanStd mean_std(std::span<const double> values);

struct RunAggregate {
  std::size_t n = 0;
  bool std_defined = false;  // false when n == 1
  MeanStd accuracy;
  MeanStd precision;
  MeanStd recall;
  MeanStd f1;
};

RunAggregate aggregate_runs(std::span<const BinaryMetrics> runs);

// JSON using the human-readable metric names as keys.
nlohmann::json to_report_json(const BinaryMetrics& m);
nlohmann::json to_report_json(const RunAggregate& a);
nlohmann::json to_report_json(const MultiLabelMetrics& m);

// Predictions joined to gold records by id. Binary metrics cover records
// with a gold binary label; multi-label metrics are computed when any gold
// record carries sentiment labels.
struct MetricsReport {
  std::size_t matched = 0;
  std::optional<BinaryMetrics> binary;
  std::optional<MultiLabelMetrics> multilabel;

  nlohmann::json to_json() const;
};

// Throws ValidationError when a gold record has no prediction.
MetricsReport evaluate_predictions(std::span<const Classification> predictions,
                                   std::span<const LabeledRecord> golds);

}  // namespace abuselens

#endif  // ABUSELENS_EVAL_METRICS_HPP_
