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

#include <cstdint>
#include <filesystem>
#include <memory>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "seerkit/candidates.h"
#include "seerkit/corpus.h"
#include "seerkit/index.h"

namespace seerkit::testing {

// Directory removed on destruction.
class TempDir {
 public:
  TempDir();
  ~TempDir();
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const std::filesystem::path& path() const { return path_; }
  std::string file(const std::string& name) const { return (path_ / name).string(); }

 private:
  std::filesystem::path path_;
};

std::string data_path(const std::string& name);  // tests/data/<name>

void write_text(const std::string& path, const std::string& content);
void write_jsonl(const std::string& path, const std::vector<Document>& docs);

struct FixtureParams {
  size_t max_docs = 50;
  size_t max_authors = 10;
  size_t max_phrases = 40;
};

struct Fixture {
  std::vector<Document> docs;
  std::set<std::string> phrases;  // joined normalized phrases
  std::vector<std::string> probe_words;
};

// Words that are their own stem under the normalization rule.
const std::vector<std::string>& stable_words();

// Random corpus over stable words: documents mix lexicon phrases, loose
// words and clause punctuation; authors come from a pool with surface-form
// variants; citations point backwards, forwards and at missing ids.
Fixture make_fixture(uint64_t seed, const FixtureParams& params = {});

// Four documents, lexicon {graph mine}:
//   a1  by Famous Fay, off topic, 20 words, cited by the other three
//   a2  by Famous Fay, one "graph mining" among other words, uncited, cites a1
//   b1  by Ona Topic, "graph mining" three times, cites a1, cited by c
//   c   by Xavier Cite, cites a1 and b1
// Fay has the most citations overall, Ona the cited on-topic work.
std::vector<Document> gs_star_documents();

Corpus corpus_of(const std::vector<Document>& docs);
std::shared_ptr<const CandidateLexicon> lexicon_of(const std::set<std::string>& phrases);
std::shared_ptr<Index> index_of(const Fixture& f, double mu = 2000.0, size_t top_n = 1000);

}  // namespace seerkit::testing
