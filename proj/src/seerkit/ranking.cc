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

#include "seerkit/ranking.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include "seerkit/error.h"

namespace seerkit {
namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

void require_k(size_t k) {
  if (k == 0) throw Error(ErrorCode::kInvalidArgument, "k must be at least 1");
}

void require_model(const CorpusStats& stats) {
  if (stats.total_length() == 0) {
    throw Error(ErrorCode::kEmptyModel, "empty corpus: no language model");
  }
}

void truncate(RankedList& list, size_t k) {
  if (list.size() > k) list.resize(k);
}

double doc_denominator(const CorpusStats& stats, DocIndex d, double mu) {
  return static_cast<double>(stats.doc(d).length) + mu;
}

double author_mass(const Index& index, AuthorIndex a, double mu) {
  return mu == index.config().lm.mu ? index.smoothing_mass(a)
                                    : index.smoothing_mass(a, mu);
}

RankedList experts_for_phrase(const Index& index, PhraseId q, double mu) {
  const Corpus& corpus = index.corpus();
  const CorpusStats& stats = index.stats();
  const double background = static_cast<double>(stats.phrase_cf(q)) /
                            static_cast<double>(stats.total_length());
  std::vector<double> direct(corpus.author_count(), 0.0);
  std::vector<char> supported(corpus.author_count(), 0);
  for (const Posting& p : stats.phrase_postings(q)) {
    const double term = corpus.citation_weight(p.doc) *
                        (static_cast<double>(p.count) /
                         doc_denominator(stats, p.doc, mu));
    for (AuthorIndex a : corpus.doc_authors(p.doc)) {
      direct[a] += term;
      supported[a] = 1;
    }
  }
  RankedList out;
  for (AuthorIndex a = 0; a < corpus.author_count(); ++a) {
    const double score = direct[a] + background * author_mass(index, a, mu);
    if (score > 0.0 || supported[a]) out.push_back({a, score});
  }
  sort_authors(corpus, out);
  return out;
}

RankedList experts_for_words(const Index& index, const Query& q,
                             const RankConfig& cfg, std::vector<ScoredDoc>* d1_out) {
  const Corpus& corpus = index.corpus();
  std::vector<ScoredDoc> d1 = top_documents(index, q.words, cfg);
  std::map<AuthorIndex, double> max_log;
  for (const ScoredDoc& sd : d1) {
    for (AuthorIndex a : corpus.doc_authors(sd.doc)) {
      auto [it, inserted] = max_log.emplace(a, sd.log_joint);
      if (!inserted) it->second = std::max(it->second, sd.log_joint);
    }
  }
  std::map<AuthorIndex, double> scaled_sum;
  for (const ScoredDoc& sd : d1) {
    if (sd.log_joint == kNegInf) continue;
    for (AuthorIndex a : corpus.doc_authors(sd.doc)) {
      scaled_sum[a] += std::exp(sd.log_joint - max_log[a]);
    }
  }
  struct Row {
    AuthorIndex a;
    double log_score;
  };
  std::vector<Row> rows;
  for (const auto& [a, m] : max_log) {
    auto it = scaled_sum.find(a);
    const double log_score =
        (m == kNegInf || it == scaled_sum.end()) ? kNegInf : m + std::log(it->second);
    rows.push_back({a, log_score});
  }
  std::sort(rows.begin(), rows.end(), [&](const Row& x, const Row& y) {
    if (x.log_score != y.log_score) return x.log_score > y.log_score;
    return corpus.author(x.a).id < corpus.author(y.a).id;
  });
  RankedList out;
  out.reserve(rows.size());
  for (const Row& r : rows) out.push_back({r.a, std::exp(r.log_score)});
  if (d1_out) *d1_out = std::move(d1);
  return out;
}

std::vector<SupportDoc> top_support(std::vector<SupportDoc> docs, const Corpus& corpus,
                                    size_t limit) {
  std::erase_if(docs, [](const SupportDoc& s) { return !(s.contribution > 0.0); });
  std::sort(docs.begin(), docs.end(), [&](const SupportDoc& x, const SupportDoc& y) {
    if (x.contribution != y.contribution) return x.contribution > y.contribution;
    return corpus.doc(x.doc).id < corpus.doc(y.doc).id;
  });
  if (docs.size() > limit) docs.resize(limit);
  return docs;
}

}  // namespace

Query make_query(std::string_view raw, const CandidateLexicon& lexicon) {
  Query q;
  q.raw = std::string(raw);
  q.words = text::normalize_tokens(raw);
  if (q.words.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "empty query");
  }
  q.normalized = text::join(q.words);
  q.phrase = lexicon.find(q.normalized);
  q.in_lexicon = q.phrase.has_value();
  return q;
}

RankConfig RankConfig::from(const IndexConfig& cfg) {
  RankConfig rc;
  rc.lm = cfg.lm;
  rc.oov = cfg.oov;
  return rc;
}

int author_in_doc(const Corpus& corpus, AuthorIndex a, DocIndex d) {
  const auto& authors = corpus.doc_authors(d);
  return std::find(authors.begin(), authors.end(), a) != authors.end() ? 1 : 0;
}

void sort_authors(const Corpus& corpus, RankedList& list) {
  std::sort(list.begin(), list.end(), [&](const RankedEntry& x, const RankedEntry& y) {
    if (x.score != y.score) return x.score > y.score;
    return corpus.author(x.id).id < corpus.author(y.id).id;
  });
}

void sort_phrases(RankedList& list) {
  std::sort(list.begin(), list.end(), [](const RankedEntry& x, const RankedEntry& y) {
    if (x.score != y.score) return x.score > y.score;
    return x.id < y.id;
  });
}

RankedList rank_experts(const Index& index, const Query& q, size_t k,
                        const RankConfig& cfg, std::vector<ScoredDoc>* d1_out) {
  require_k(k);
  cfg.lm.validate();
  cfg.oov.validate();
  require_model(index.stats());
  if (!q.in_lexicon) {
    RankedList list = experts_for_words(index, q, cfg, d1_out);
    truncate(list, k);
    return list;
  }
  const bool cacheable = cfg.use_cache && cfg.lm.mu == index.config().lm.mu;
  std::shared_ptr<const RankedList> full;
  if (cacheable) full = index.cache().get(*q.phrase);
  if (!full) {
    full = std::make_shared<const RankedList>(experts_for_phrase(index, *q.phrase, cfg.lm.mu));
    if (cacheable) index.cache().put(*q.phrase, full);
  }
  RankedList out(full->begin(), full->begin() + std::min(k, full->size()));
  return out;
}

RankedList rank_experts(const Index& index, const Query& q, size_t k) {
  return rank_experts(index, q, k, RankConfig::from(index.config()));
}

RankedList rank_expertise(const Index& index, AuthorIndex a, size_t k,
                          const RankConfig& cfg) {
  require_k(k);
  cfg.lm.validate();
  const Corpus& corpus = index.corpus();
  const CorpusStats& stats = index.stats();
  if (a >= corpus.author_count()) throw Error(ErrorCode::kNotFound, "unknown author");
  require_model(stats);
  const double mu = cfg.lm.mu;
  std::map<PhraseId, double> direct;
  for (DocIndex d : corpus.author(a).docs) {
    const double weight = corpus.citation_weight(d) / doc_denominator(stats, d, mu);
    for (const auto& [t, c] : stats.doc(d).phrases) {
      direct[t] += weight * static_cast<double>(c);
    }
  }
  const double mass = author_mass(index, a, mu);
  const double total = static_cast<double>(stats.total_length());
  RankedList out;
  out.reserve(direct.size());
  for (const auto& [t, sum] : direct) {
    out.push_back({t, sum + static_cast<double>(stats.phrase_cf(t)) / total * mass});
  }
  sort_phrases(out);
  truncate(out, k);
  return out;
}

AuthorIndex resolve_author(const Corpus& corpus, std::string_view name) {
  std::string key;
  try {
    key = normalize_name(name);
  } catch (const Error&) {
    throw Error(ErrorCode::kNotFound, "unknown author: '" + std::string(name) + "'");
  }
  auto a = corpus.find_author(key);
  if (!a) throw Error(ErrorCode::kNotFound, "unknown author: '" + std::string(name) + "'");
  return *a;
}

RankedList rank_expertise(const Index& index, std::string_view author_name,
                          size_t k, const RankConfig& cfg) {
  return rank_expertise(index, resolve_author(index.corpus(), author_name), k, cfg);
}

RankedList rank_related(const Index& index, PhraseId t, size_t k,
                        const RankConfig& cfg) {
  require_k(k);
  cfg.lm.validate();
  const Corpus& corpus = index.corpus();
  const CorpusStats& stats = index.stats();
  require_model(stats);
  const double mu = cfg.lm.mu;
  double background_mass = 0.0;
  std::map<PhraseId, double> direct;
  for (const Posting& p : stats.phrase_postings(t)) {
    const double pt = p_phrase_given_doc(stats, t, p.doc, cfg.lm);
    const double denom = doc_denominator(stats, p.doc, mu);
    const double weight = corpus.citation_weight(p.doc) * pt;
    background_mass += weight * (mu / denom);
    for (const auto& [s, c] : stats.doc(p.doc).phrases) {
      if (s == t) continue;
      direct[s] += weight * (static_cast<double>(c) / denom);
    }
  }
  const double total = static_cast<double>(stats.total_length());
  RankedList out;
  out.reserve(direct.size());
  for (const auto& [s, sum] : direct) {
    out.push_back(
        {s, sum + static_cast<double>(stats.phrase_cf(s)) / total * background_mass});
  }
  sort_phrases(out);
  truncate(out, k);
  return out;
}

RankedList rank_related(const Index& index, const Query& q, size_t k,
                        const RankConfig& cfg) {
  if (!q.in_lexicon) {
    throw Error(ErrorCode::kNotInLexicon,
                "'" + q.raw +
                    "' is not a lexicon phrase; related phrases exist only for "
                    "lexicon phrases");
  }
  return rank_related(index, *q.phrase, k, cfg);
}

std::vector<ScoredDoc> top_documents(const Index& index,
                                     const std::vector<std::string>& words,
                                     const RankConfig& cfg) {
  if (words.empty()) throw Error(ErrorCode::kInvalidArgument, "empty query");
  cfg.lm.validate();
  cfg.oov.validate();
  const Corpus& corpus = index.corpus();
  const CorpusStats& stats = index.stats();
  require_model(stats);
  std::vector<std::pair<WordId, uint64_t>> ids;
  for (const std::string& w : words) {
    auto id = stats.find_word(w);
    if (!id) return {};
    ids.emplace_back(*id, stats.word_cf(*id));
  }
  const double mu = cfg.lm.mu;
  std::vector<ScoredDoc> scored;
  scored.reserve(corpus.size());
  for (DocIndex d = 0; d < corpus.size(); ++d) {
    const DocTerms& terms = stats.doc(d);
    double log_p = 0.0;
    for (const auto& [w, cf] : ids) {
      log_p += std::log(smoothed_probability(terms.word_count(w), terms.length, cf,
                                             stats.total_length(), mu));
    }
    if (log_p == kNegInf) continue;
    const double prior = corpus.citation_weight(d);
    const double log_joint = prior > 0.0 ? std::log(prior) + log_p : kNegInf;
    scored.push_back({d, log_p, log_joint});
  }
  auto before = [&](const ScoredDoc& x, const ScoredDoc& y) {
    if (x.log_joint != y.log_joint) return x.log_joint > y.log_joint;
    if (x.log_p != y.log_p) return x.log_p > y.log_p;
    return corpus.doc(x.doc).id < corpus.doc(y.doc).id;
  };
  const size_t n = std::min(cfg.oov.top_n, scored.size());
  std::partial_sort(scored.begin(), scored.begin() + static_cast<std::ptrdiff_t>(n),
                    scored.end(), before);
  scored.resize(n);
  return scored;
}

std::vector<SupportDoc> expert_support(const Index& index, const Query& q,
                                       AuthorIndex a, const RankConfig& cfg,
                                       size_t limit, const std::vector<ScoredDoc>* d1) {
  const Corpus& corpus = index.corpus();
  std::vector<SupportDoc> docs;
  if (q.in_lexicon) {
    for (DocIndex d : corpus.author(a).docs) {
      const double p = p_phrase_given_doc(index.stats(), *q.phrase, d, cfg.lm);
      docs.push_back({d, p, corpus.citation_weight(d) * p});
    }
  } else {
    std::vector<ScoredDoc> local;
    if (!d1) {
      local = top_documents(index, q.words, cfg);
      d1 = &local;
    }
    for (const ScoredDoc& sd : *d1) {
      if (!author_in_doc(corpus, a, sd.doc)) continue;
      docs.push_back({sd.doc, std::exp(sd.log_p), std::exp(sd.log_joint)});
    }
  }
  return top_support(std::move(docs), corpus, limit);
}

std::vector<SupportDoc> expertise_support(const Index& index, AuthorIndex a,
                                          PhraseId t, const RankConfig& cfg,
                                          size_t limit) {
  const Corpus& corpus = index.corpus();
  std::vector<SupportDoc> docs;
  for (DocIndex d : corpus.author(a).docs) {
    const double p = p_phrase_given_doc(index.stats(), t, d, cfg.lm);
    docs.push_back({d, p, corpus.citation_weight(d) * p});
  }
  return top_support(std::move(docs), corpus, limit);
}

std::vector<SupportDoc> related_support(const Index& index, PhraseId t,
                                        PhraseId s, const RankConfig& cfg,
                                        size_t limit) {
  const Corpus& corpus = index.corpus();
  const CorpusStats& stats = index.stats();
  std::vector<SupportDoc> docs;
  for (const Posting& p : stats.phrase_postings(t)) {
    const double pt = p_phrase_given_doc(stats, t, p.doc, cfg.lm);
    const double ps = p_phrase_given_doc(stats, s, p.doc, cfg.lm);
    docs.push_back({p.doc, ps, corpus.citation_weight(p.doc) * pt * ps});
  }
  return top_support(std::move(docs), corpus, limit);
}

}  // namespace seerkit
