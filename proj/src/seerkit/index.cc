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

#include "seerkit/index.h"

#include <algorithm>
#include <thread>

#include "seerkit/error.h"

namespace seerkit {

void OovConfig::validate() const {
  if (top_n < 1) throw Error(ErrorCode::kConfig, "top_n must be at least 1");
}

std::shared_ptr<const RankedList> ExpertCache::get(PhraseId q) const {
  std::lock_guard lock(mu_);
  auto it = lists_.find(q);
  return it == lists_.end() ? nullptr : it->second;
}

void ExpertCache::put(PhraseId q, std::shared_ptr<const RankedList> list) {
  std::lock_guard lock(mu_);
  lists_.emplace(q, std::move(list));
}

size_t ExpertCache::size() const {
  std::lock_guard lock(mu_);
  return lists_.size();
}

Index::Index(const Index& other)
    : corpus_(other.corpus_),
      lexicon_(other.lexicon_),
      trie_(other.trie_),
      stats_(other.stats_),
      cfg_(other.cfg_),
      smoothing_mass_(other.smoothing_mass_) {}

std::shared_ptr<Index> Index::build(Corpus corpus,
                                    std::shared_ptr<const CandidateLexicon> lexicon,
                                    const IndexConfig& cfg, unsigned threads) {
  cfg.lm.validate();
  cfg.oov.validate();
  auto index = std::make_shared<Index>();
  index->corpus_ = std::move(corpus);
  index->lexicon_ = std::move(lexicon);
  index->trie_ = std::make_shared<PhraseTrie>(*index->lexicon_);
  index->stats_ = CorpusStats(index->lexicon_->size());
  index->cfg_ = cfg;

  const Corpus& c = index->corpus_;
  const size_t n = c.size();
  std::vector<DocKeyphrases> extracted(n);
  std::vector<std::vector<text::Segment>> segments(n);
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<size_t>(threads, std::max<size_t>(n, 1)));
  auto work = [&](size_t begin, size_t end) {
    for (size_t d = begin; d < end; ++d) {
      segments[d] = normalize_document(c.doc(static_cast<DocIndex>(d)));
      extracted[d] = extract_keyphrases(c.doc(static_cast<DocIndex>(d)).id,
                                        segments[d], *index->trie_);
    }
  };
  if (threads <= 1) {
    work(0, n);
  } else {
    std::vector<std::thread> pool;
    const size_t chunk = (n + threads - 1) / threads;
    for (size_t begin = 0; begin < n; begin += chunk) {
      pool.emplace_back(work, begin, std::min(n, begin + chunk));
    }
    for (auto& t : pool) t.join();
  }
  for (size_t d = 0; d < n; ++d) index->stats_.add(extracted[d], segments[d]);
  index->refresh_all_authors();
  return index;
}

std::shared_ptr<Index> Index::assemble(Corpus corpus,
                                       std::shared_ptr<const CandidateLexicon> lexicon,
                                       const IndexConfig& cfg,
                                       std::vector<StoredDoc> terms) {
  cfg.lm.validate();
  cfg.oov.validate();
  if (terms.size() != corpus.size()) {
    throw Error(ErrorCode::kConfig, "index holds " + std::to_string(terms.size()) +
                                        " documents, corpus holds " +
                                        std::to_string(corpus.size()));
  }
  auto index = std::make_shared<Index>();
  index->corpus_ = std::move(corpus);
  index->lexicon_ = std::move(lexicon);
  index->trie_ = std::make_shared<PhraseTrie>(*index->lexicon_);
  index->stats_ = CorpusStats(index->lexicon_->size());
  index->cfg_ = cfg;
  for (StoredDoc& sd : terms) {
    DocTerms t;
    t.length = sd.length;
    t.word_total = sd.word_total;
    for (auto& [q, count] : sd.phrases) {
      if (q >= index->lexicon_->size()) {
        throw Error(ErrorCode::kConfig, "index refers to a phrase outside the lexicon");
      }
    }
    t.phrases = std::move(sd.phrases);
    for (auto& [w, count] : sd.words) {
      t.words.emplace_back(index->stats_.intern(w), count);
    }
    std::sort(t.words.begin(), t.words.end());
    index->stats_.add(std::move(t));
  }
  index->refresh_all_authors();
  return index;
}

double Index::smoothing_mass(AuthorIndex a, double mu) const {
  double sum = 0.0;
  for (DocIndex d : corpus_.author(a).docs) {
    const double len = stats_.doc(d).length;
    sum += corpus_.citation_weight(d) * (mu / (len + mu));
  }
  return sum;
}

void Index::refresh_authors(const std::set<AuthorIndex>& authors) {
  smoothing_mass_.resize(corpus_.author_count(), 0.0);
  for (AuthorIndex a : authors) smoothing_mass_[a] = smoothing_mass(a, cfg_.lm.mu);
}

void Index::refresh_all_authors() {
  smoothing_mass_.assign(corpus_.author_count(), 0.0);
  for (AuthorIndex a = 0; a < corpus_.author_count(); ++a) {
    smoothing_mass_[a] = smoothing_mass(a, cfg_.lm.mu);
  }
}

void Index::add_document(Document doc, IngestReport* issues,
                         std::set<AuthorIndex>* touched_authors,
                         std::set<PhraseId>* touched_phrases) {
  const DocIndex d = corpus_.add(std::move(doc), issues);
  const auto segments = normalize_document(corpus_.doc(d));
  const DocKeyphrases kp = extract_keyphrases(corpus_.doc(d).id, segments, *trie_);
  stats_.add(kp, segments);
  if (touched_phrases) {
    for (const auto& [q, c] : kp.phrase_counts) touched_phrases->insert(q);
  }
  if (touched_authors) {
    for (AuthorIndex a : corpus_.doc_authors(d)) touched_authors->insert(a);
    for (DocIndex cited : corpus_.last_cited()) {
      for (AuthorIndex a : corpus_.doc_authors(cited)) touched_authors->insert(a);
    }
  }
}

}  // namespace seerkit
