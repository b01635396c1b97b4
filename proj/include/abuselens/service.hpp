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

#ifndef ABUSELENS_SERVICE_HPP_
#define ABUSELENS_SERVICE_HPP_

#include <filesystem>
#include <memory>
#include <string>

#include <nlohmann/json.hpp>

#include "abuselens/annotation.hpp"

namespace abuselens {

struct ServiceOptions {
  std::string host = "127.0.0.1";
  int port = 8080;  // 0 picks a free port
  std::filesystem::path static_dir;  // served at / when set
  nlohmann::json corpus_summary = nlohmann::json::object();
};

// HTTP front end for an AnnotationQueue:
//   GET  /api/tasks/next               lease for the calling client
//   POST /api/tasks/{id}/decision      {binary, sentiments[], action}
//   GET  /api/stats
//   GET  /api/corpus/summary
// The client is identified by the X-Client-Id header or ?client=.
class AnnotationService {
 public:
  AnnotationService(AnnotationQueue& queue, ServiceOptions options);
  ~AnnotationService();
  AnnotationService(const AnnotationService&) = delete;
  AnnotationService& operator=(const AnnotationService&) = delete;

  // Binds the socket; returns the bound port. Throws TransportError.
  int bind();
  // Serves until stop(); call bind() first.
  void listen();
  // bind() and serve on a background thread.
  int start();
  void stop();
  int port() const { return port_; }

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
  int port_ = 0;
};

}  // namespace abuselens

#endif  // ABUSELENS_SERVICE_HPP_
