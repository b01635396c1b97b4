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

// Parallel kernels against their serial references on a synthetic corpus.

#include <benchmark/benchmark.h>

#include <vector>

#include "abuselens/aggregator.hpp"
#include "abuselens/classifier.hpp"
#include "abuselens/keyword_backend.hpp"
#include "abuselens/log.hpp"
#include "abuselens/ngram.hpp"
#include "abuselens/synthetic.hpp"
#include "abuselens/text_normalizer.hpp"

namespace al = abuselens;

namespace {

struct Corpus {
  std::vector<al::RawPost> raw;
  std::vector<al::NormalizedPost> posts;
  std::vector<al::SentimentVector> sentiments;
  al::TextNormalizer normalizer;
  al::KeywordBackend backend;
  al::Stopwords stopwords = al::Stopwords::defaults();
};

const Corpus& corpus() {
  static const Corpus c = [] {
    Corpus c;
    al::SyntheticOptions o;
    o.count = 20000;
    c.raw = al::generate_posts(o);
    c.posts = al::normalize_batch(c.raw, c.normalizer);
    for (const auto& p : al::classify_batch(c.posts, c.backend)) c.sentiments.push_back(p.sentiment);
    return c;
  }();
  return c;
}

void BM_NormalizeParallel(benchmark::State& state) {
  const auto& c = corpus();
  for (auto _ : state) benchmark::DoNotOptimize(al::normalize_batch(c.raw, c.normalizer));
  state.SetItemsProcessed(state.iterations() * c.raw.size());
}

void BM_NormalizeSerial(benchmark::State& state) {
  const auto& c = corpus();
  for (auto _ : state) benchmark::DoNotOptimize(al::reference::normalize_batch(c.raw, c.normalizer));
  state.SetItemsProcessed(state.iterations() * c.raw.size());
}

void BM_ClassifyParallel(benchmark::State& state) {
  const auto& c = corpus();
  for (auto _ : state) benchmark::DoNotOptimize(al::classify_batch(c.posts, c.backend));
  state.SetItemsProcessed(state.iterations() * c.posts.size());
}

void BM_ClassifySerial(benchmark::State& state) {
  const auto& c = corpus();
  for (auto _ : state) benchmark::DoNotOptimize(al::reference::classify_batch(c.posts, c.backend));
  state.SetItemsProcessed(state.iterations() * c.posts.size());
}

void BM_NGramsParallel(benchmark::State& state) {
  const auto& c = corpus();
  for (auto _ : state) {
    benchmark::DoNotOptimize(al::count_ngrams(c.posts, 3, c.stopwords, al::NGramFilter::kAll));
  }
}

void BM_NGramsSerial(benchmark::State& state) {
  const auto& c = corpus();
  for (auto _ : state) {
    benchmark::DoNotOptimize(al::reference::count_ngrams(c.posts, 3, c.stopwords, al::NGramFilter::kAll));
  }
}

void BM_CooccurrenceParallel(benchmark::State& state) {
  const auto& c = corpus();
  for (auto _ : state) benchmark::DoNotOptimize(al::cooccurrence(c.sentiments));
}

void BM_CooccurrenceSerial(benchmark::State& state) {
  const auto& c = corpus();
  for (auto _ : state) benchmark::DoNotOptimize(al::reference::cooccurrence(c.sentiments));
}

}  // namespace

BENCHMARK(BM_NormalizeParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_NormalizeSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ClassifyParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ClassifySerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_NGramsParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_NGramsSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CooccurrenceParallel)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_CooccurrenceSerial)->Unit(benchmark::kMicrosecond);

int main(int argc, char** argv) {
  al::log::set_sink([](al::log::Level, std::string_view) {});
  benchmark::Initialize(&argc, argv);
  if (benchmark::ReportUnrecognizedArguments(argc, argv)) return 1;
  benchmark::RunSpecifiedBenchmarks();
  benchmark::Shutdown();
  return 0;
}
