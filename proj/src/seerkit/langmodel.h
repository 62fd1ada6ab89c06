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

// Bag-of-phrases language model. A document is the sequence of its matched
// phrases and residual words, so |d| and |D| count phrases, not words. Word
// statistics for out-of-lexicon queries cover every token of the document,
// including tokens inside matched phrases, but share the phrase-denominated
// lengths.

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "seerkit/candidates.h"
#include "seerkit/corpus.h"
#include "seerkit/matcher.h"

namespace seerkit {

struct LmConfig {
  double mu = 2000.0;  // Dirichlet smoothing factor

  // Throws Error(kConfig) unless mu > 0 and finite.
  void validate() const;
};

using WordId = uint32_t;

struct Posting {
  DocIndex doc;
  uint32_t count;
};

struct DocTerms {
  std::vector<std::pair<PhraseId, uint32_t>> phrases;  // sorted by id
  std::vector<std::pair<WordId, uint32_t>> words;      // sorted by id
  uint32_t length = 0;      // |d|
  uint32_t word_total = 0;  // all word tokens

  uint32_t phrase_count(PhraseId id) const;
  uint32_t word_count(WordId id) const;
};

class CorpusStats {
 public:
  CorpusStats() = default;
  explicit CorpusStats(size_t lexicon_size);

  // Appends the next document. Documents must arrive in DocIndex order.
  void add(const DocKeyphrases& keyphrases, std::span<const text::Segment> segments);
  // Same, for terms already interned against this vocabulary.
  void add(DocTerms terms);

  WordId intern(std::string_view word);

  size_t doc_count() const { return docs_.size(); }
  const DocTerms& doc(DocIndex d) const { return docs_[d]; }

  uint64_t total_length() const { return total_length_; }  // |D|
  uint64_t total_words() const { return total_words_; }

  size_t lexicon_size() const { return phrase_cf_.size(); }
  uint64_t phrase_cf(PhraseId q) const { return phrase_cf_[q]; }  // c(q,D)
  const std::vector<Posting>& phrase_postings(PhraseId q) const {
    return phrase_postings_[q];
  }

  size_t vocabulary_size() const { return words_.size(); }
  const std::string& word(WordId w) const { return words_[w]; }
  std::optional<WordId> find_word(std::string_view word) const;
  uint64_t word_cf(WordId w) const { return word_cf_[w]; }  // c(w,D)
  const std::vector<Posting>& word_postings(WordId w) const {
    return word_postings_[w];
  }

 private:
  std::vector<DocTerms> docs_;
  uint64_t total_length_ = 0;
  uint64_t total_words_ = 0;
  std::vector<uint64_t> phrase_cf_;
  std::vector<std::vector<Posting>> phrase_postings_;
  std::unordered_map<std::string, WordId> word_ids_;
  std::vector<std::string> words_;
  std::vector<uint64_t> word_cf_;
  std::vector<std::vector<Posting>> word_postings_;
};

// Dirichlet-smoothed estimate from raw counts:
//   |d|/(|d|+mu) * c_d/|d| + (1 - |d|/(|d|+mu)) * c_D/|D|
// with the first term taken as 0 when |d| = 0. Throws Error(kEmptyModel) when
// |D| = 0.
double smoothed_probability(uint64_t count_in_doc, uint64_t doc_length,
                            uint64_t count_in_corpus, uint64_t corpus_length,
                            double mu);

// p(q|d) for a lexicon phrase.
double p_phrase_given_doc(const CorpusStats& stats, PhraseId q, DocIndex d,
                          const LmConfig& cfg);

// One factor of the word-sequence product.
double p_word_given_doc(const CorpusStats& stats, std::string_view word,
                        DocIndex d, const LmConfig& cfg);

// log p(q'|d) as a sum of per-word log terms; -inf when some word never
// occurs in the corpus. Throws Error(kInvalidArgument) for an empty sequence.
double log_p_words_given_doc(const CorpusStats& stats,
                             std::span<const std::string> words, DocIndex d,
                             const LmConfig& cfg);

// exp(log_p_words_given_doc); may underflow to 0 for long queries.
double p_words_given_doc(const CorpusStats& stats,
                         std::span<const std::string> words, DocIndex d,
                         const LmConfig& cfg);

// Debug export: per phrase {"phrase","cD","postings":[[doc_id,c],...]} plus
// the same for words and the two corpus lengths. Sorted by text, so two
// stats objects with equal content export byte-identically.
nlohmann::json export_stats(const CorpusStats& stats, const CandidateLexicon& lexicon,
                            const Corpus& corpus);

}  // namespace seerkit
