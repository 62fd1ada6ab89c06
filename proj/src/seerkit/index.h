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
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "seerkit/candidates.h"
#include "seerkit/corpus.h"
#include "seerkit/langmodel.h"
#include "seerkit/matcher.h"

namespace seerkit {

struct OovConfig {
  size_t top_n = 1000;  // |D_1|

  void validate() const;
};

struct IndexConfig {
  LmConfig lm;
  OovConfig oov;
};

struct RankedEntry {
  uint32_t id;  // AuthorIndex or PhraseId
  double score;

  bool operator==(const RankedEntry&) const = default;
};

using RankedList = std::vector<RankedEntry>;

// Full expert lists of lexicon phrases, filled lazily by rank_experts.
class ExpertCache {
 public:
  std::shared_ptr<const RankedList> get(PhraseId q) const;
  void put(PhraseId q, std::shared_ptr<const RankedList> list);
  size_t size() const;

 private:
  mutable std::mutex mu_;
  std::unordered_map<PhraseId, std::shared_ptr<const RankedList>> lists_;
};

// One immutable snapshot: corpus, lexicon, per-document terms, corpus
// statistics and per-author smoothing aggregates. Copying yields an
// independent snapshot with an empty expert cache, which is how updates
// build their successor.
class Index {
 public:
  Index() = default;
  Index(const Index& other);
  Index& operator=(const Index&) = delete;

  // Extracts every document in parallel, then accumulates statistics in
  // document order. `threads` = 0 picks the hardware concurrency.
  static std::shared_ptr<Index> build(Corpus corpus,
                                      std::shared_ptr<const CandidateLexicon> lexicon,
                                      const IndexConfig& cfg, unsigned threads = 0);

  // Reassembles a snapshot from stored per-document terms. `terms` must
  // follow corpus order and use ids of `lexicon`; words are re-interned.
  struct StoredDoc {
    std::vector<std::pair<PhraseId, uint32_t>> phrases;
    std::vector<std::pair<std::string, uint32_t>> words;
    uint32_t length = 0;
    uint32_t word_total = 0;
  };
  static std::shared_ptr<Index> assemble(Corpus corpus,
                                         std::shared_ptr<const CandidateLexicon> lexicon,
                                         const IndexConfig& cfg,
                                         std::vector<StoredDoc> terms);

  const Corpus& corpus() const { return corpus_; }
  const CandidateLexicon& lexicon() const { return *lexicon_; }
  std::shared_ptr<const CandidateLexicon> shared_lexicon() const { return lexicon_; }
  const PhraseTrie& trie() const { return *trie_; }
  const CorpusStats& stats() const { return stats_; }
  const IndexConfig& config() const { return cfg_; }

  // Σ over the author's documents of p(d)·mu/(|d|+mu) at the index mu.
  double smoothing_mass(AuthorIndex a) const { return smoothing_mass_[a]; }
  // Same sum at an arbitrary mu, computed on the spot.
  double smoothing_mass(AuthorIndex a, double mu) const;

  ExpertCache& cache() const { return *cache_; }

  // Appends one document: corpus entry, terms, statistics. Authors whose
  // aggregates need refreshing are collected in `touched_authors`; call
  // refresh_authors once the whole batch is in.
  void add_document(Document doc, IngestReport* issues,
                    std::set<AuthorIndex>* touched_authors,
                    std::set<PhraseId>* touched_phrases);
  void refresh_authors(const std::set<AuthorIndex>& authors);

 private:
  void refresh_all_authors();

  Corpus corpus_;
  std::shared_ptr<const CandidateLexicon> lexicon_;
  std::shared_ptr<const PhraseTrie> trie_;
  CorpusStats stats_;
  IndexConfig cfg_;
  std::vector<double> smoothing_mass_;
  std::unique_ptr<ExpertCache> cache_ = std::make_unique<ExpertCache>();
};

}  // namespace seerkit
