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

#ifndef ABUSELENS_MODEL_BACKENDS_HPP_
#define ABUSELENS_MODEL_BACKENDS_HPP_

#include <filesystem>
#include <string>

#include <nlohmann/json.hpp>

#include "abuselens/classifier.hpp"

namespace abuselens {

// Client for an external classification service:
//   POST <base>/classify  {"texts": ["...", ...]}
//   -> {"results": [{"binary_logit": x, "sentiment_logits": [10 reals]}, ...]}
// Logits go through a sigmoid. Connection failures and 5xx responses raise
// TransportError (retryable); malformed or wrong-arity bodies raise
// SchemaError.
class RemoteHttpBackend final : public ClassifierBackend {
 public:
  explicit RemoteHttpBackend(ModelBackendDescriptor descriptor);

  const std::string& id() const override { return id_; }
  BackendKind kind() const override { return BackendKind::kRemoteHttp; }
  std::size_t max_tokens() const override { return descriptor_.max_tokens; }
  std::vector<ModelOutput> infer(std::span<const NormalizedPost> posts) const override;

 private:
  ModelBackendDescriptor descriptor_;
  std::string id_;
  std::string scheme_host_port_;
  std::string path_prefix_;
};

// Metadata shipped next to a portable model file (<model>.json or
// metadata.json in the same directory). Required fields:
//   label_order: the ten sentiment names in SentimentVector order
//   inputs: ["ids", "mask", "type_ids"]
//   outputs: {"binary_logit": 1, "sentiment_logits": 10}
//   max_length: positive integer
//   tokenizer: non-empty string
struct ModelMetadata {
  std::vector<std::string> label_order;
  std::size_t max_length = 0;
  std::string tokenizer;
  std::string provenance;
};

// Throws ValidationError describing the first contract violation.
ModelMetadata validate_model_metadata(const nlohmann::json& metadata);

std::filesystem::path metadata_path_for(const std::filesystem::path& model_path);

// Loads and validates the metadata of a portable (ONNX) model file. This
// build has no ONNX runtime, so construction throws BackendUnavailable once
// the file and metadata pass validation.
class PortableModelBackend final : public ClassifierBackend {
 public:
  explicit PortableModelBackend(ModelBackendDescriptor descriptor);

  const std::string& id() const override { return id_; }
  BackendKind kind() const override { return BackendKind::kPortableModelFile; }
  std::size_t max_tokens() const override { return metadata_.max_length; }
  std::vector<ModelOutput> infer(std::span<const NormalizedPost> posts) const override;

  const ModelMetadata& metadata() const { return metadata_; }

 private:
  ModelBackendDescriptor descriptor_;
  std::string id_;
  ModelMetadata metadata_;
};

}  // namespace abuselens

#endif  // ABUSELENS_MODEL_BACKENDS_HPP_
