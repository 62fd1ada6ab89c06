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

// Expert, expertise and related-phrase ranking over an Index snapshot.
//
// Every document gets a nonzero p(q|d) through the collection term, so the
// sums below formally run over the whole corpus. They are evaluated over
// posting lists instead, using
//   p(q|d) = c(q,d)/(|d|+mu) + mu/(|d|+mu) * c(q,D)/|D|
// and per-author totals of p(d)*mu/(|d|+mu) for the second term. Both
// forms are the same number.

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "seerkit/index.h"

namespace seerkit {

struct Query {
  std::string raw;
  std::string normalized;          // joined normalized tokens
  std::optional<PhraseId> phrase;  // set iff in_lexicon
  bool in_lexicon = false;
  std::vector<std::string> words;  // fallback word sequence
};

// Throws Error(kInvalidArgument) when the text has no tokens.
Query make_query(std::string_view raw, const CandidateLexicon& lexicon);

struct RankConfig {
  LmConfig lm;
  OovConfig oov;
  bool use_cache = true;  // only consulted when mu matches the index

  static RankConfig from(const IndexConfig& cfg);
};

// 1 if the author is on the document's byline, else 0.
int author_in_doc(const Corpus& corpus, AuthorIndex a, DocIndex d);

// Sorts by score descending, ties by ascending author key / phrase id.
void sort_authors(const Corpus& corpus, RankedList& list);
void sort_phrases(RankedList& list);

// Experts for a query. In-lexicon queries score every author over the whole
// corpus; other queries sum over the top_n documents by p(d)*p(q'|d).
// Candidates are authors with positive score plus authors of supporting
// documents (documents containing the phrase, or D_1). Throws
// Error(kInvalidArgument) for k = 0, Error(kEmptyModel) for an empty corpus.
struct ScoredDoc;
RankedList rank_experts(const Index& index, const Query& q, size_t k,
                        const RankConfig& cfg,
                        std::vector<ScoredDoc>* d1_out = nullptr);
RankedList rank_experts(const Index& index, const Query& q, size_t k);

// Phrases of the author's documents scored by sum over those documents of
// p(d)*p(t|d). Throws Error(kNotFound) for an unknown author.
RankedList rank_expertise(const Index& index, AuthorIndex a, size_t k,
                          const RankConfig& cfg);
RankedList rank_expertise(const Index& index, std::string_view author_name,
                          size_t k, const RankConfig& cfg);

// Phrases co-occurring with t, scored by sum over t's postings of
// p(d)*p(t|d)*p(s|d); t itself is left out.
RankedList rank_related(const Index& index, PhraseId t, size_t k,
                        const RankConfig& cfg);
// Throws Error(kNotInLexicon) for out-of-lexicon queries.
RankedList rank_related(const Index& index, const Query& q, size_t k,
                        const RankConfig& cfg);

// Resolves a raw author name to its index; Error(kNotFound) when absent.
AuthorIndex resolve_author(const Corpus& corpus, std::string_view name);

struct ScoredDoc {
  DocIndex doc;
  double log_p;      // log p(q'|d)
  double log_joint;  // log p(d) + log p(q'|d)
};

// D_1: documents ordered by (p(d)p(q'|d) desc, p(q'|d) desc, id asc),
// cut at top_n. Documents with p(q'|d) = 0 never enter.
std::vector<ScoredDoc> top_documents(const Index& index,
                                     const std::vector<std::string>& words,
                                     const RankConfig& cfg);

struct SupportDoc {
  DocIndex doc;
  double p;             // p(q|d) (or p(s|d) for related phrases)
  double contribution;  // the summand for this document
};

// Up to `limit` largest summands behind one ranked entry.
// For out-of-lexicon queries pass the D_1 already computed for the
// ranking, or null to recompute it.
std::vector<SupportDoc> expert_support(const Index& index, const Query& q,
                                       AuthorIndex a, const RankConfig& cfg,
                                       size_t limit = 3,
                                       const std::vector<ScoredDoc>* d1 = nullptr);
std::vector<SupportDoc> expertise_support(const Index& index, AuthorIndex a,
                                          PhraseId t, const RankConfig& cfg,
                                          size_t limit = 3);
std::vector<SupportDoc> related_support(const Index& index, PhraseId t,
                                        PhraseId s, const RankConfig& cfg,
                                        size_t limit = 3);

}  // namespace seerkit
