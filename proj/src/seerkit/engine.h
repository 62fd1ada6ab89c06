// Copyright 2026 The seerkit Authors
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

#pragma once

#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include <json.hpp>

#include "seerkit/candidates.h"
#include "seerkit/index.h"
#include "seerkit/update.h"

namespace seerkit {

inline constexpr int kEngineFormatVersion = 1;

struct BuildOptions {
  std::string corpus_path;
  std::string wiki_dump_path;       // optional
  std::string category_edges_path;  // optional
  std::string lexicon_path;         // optional; skips candidate harvesting
  std::vector<RootSpec> roots = default_roots();
  int min_ngram_count = 3;
  IndexConfig index;
  unsigned threads = 0;
};

struct BuildReport {
  size_t documents = 0;
  size_t authors = 0;
  size_t lexicon_size = 0;
  size_t wiki_phrases = 0;
  size_t ngram_phrases = 0;
  size_t phrases_in_corpus = 0;   // lexicon phrases with c(q,D) > 0
  uint64_t phrase_occurrences = 0;  // matched phrase tokens
  uint64_t total_length = 0;        // |D|
  uint64_t citation_edges = 0;
  IngestReport ingest;
  std::vector<std::string> warnings;
};

nlohmann::json to_json(const BuildReport& report);

// Reads the candidate sources and the corpus and indexes it.
std::shared_ptr<Index> build_index(const BuildOptions& opts, BuildReport* report);

// Holder of the current snapshot. Readers take a snapshot and keep using it
// for the whole request; updates are serialized and publish a new snapshot
// in one pointer swap.
class Engine {
 public:
  explicit Engine(std::shared_ptr<const Index> index);
  Engine(const Engine&) = delete;
  Engine& operator=(const Engine&) = delete;

  static std::unique_ptr<Engine> build(const BuildOptions& opts, BuildReport* report);

  // Loads an engine directory. Throws Error(kIo) for missing files and
  // Error(kConfig) for a foreign or mismatched manifest.
  static std::unique_ptr<Engine> open(const std::string& dir);

  // Writes the current snapshot. An existing non-empty `dir` is replaced
  // only with `force`, otherwise Error(kAlreadyExists).
  void save(const std::string& dir, bool force) const;

  std::shared_ptr<const Index> snapshot() const;

  // All-or-nothing: on any error the current snapshot stays in place.
  UpdateSummary add_documents(std::vector<Document> documents);

 private:
  mutable std::mutex snapshot_mu_;
  std::mutex update_mu_;
  std::shared_ptr<const Index> index_;
};

// Writes / reads one snapshot as an engine directory.
void save_index(const Index& index, const std::string& dir, bool force);
std::shared_ptr<Index> load_index(const std::string& dir);

}  // namespace seerkit
