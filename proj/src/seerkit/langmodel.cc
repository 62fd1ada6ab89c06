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

#include "seerkit/langmodel.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include "seerkit/error.h"

namespace seerkit {
namespace {

template <typename Id>
uint32_t lookup_count(const std::vector<std::pair<Id, uint32_t>>& v, Id id) {
  auto it = std::lower_bound(v.begin(), v.end(), id,
                             [](const auto& e, Id x) { return e.first < x; });
  return (it != v.end() && it->first == id) ? it->second : 0;
}

nlohmann::json postings_json(const std::vector<Posting>& postings,
                             const Corpus& corpus) {
  std::vector<std::pair<std::string, uint32_t>> rows;
  rows.reserve(postings.size());
  for (const Posting& p : postings) rows.emplace_back(corpus.doc(p.doc).id, p.count);
  std::sort(rows.begin(), rows.end());
  nlohmann::json out = nlohmann::json::array();
  for (auto& [id, c] : rows) out.push_back({id, c});
  return out;
}

}  // namespace

void LmConfig::validate() const {
  if (!(mu > 0.0) || !std::isfinite(mu)) {
    throw Error(ErrorCode::kConfig, "mu must be a positive finite number");
  }
}

uint32_t DocTerms::phrase_count(PhraseId id) const { return lookup_count(phrases, id); }
uint32_t DocTerms::word_count(WordId id) const { return lookup_count(words, id); }

CorpusStats::CorpusStats(size_t lexicon_size)
    : phrase_cf_(lexicon_size, 0), phrase_postings_(lexicon_size) {}

WordId CorpusStats::intern(std::string_view word) {
  auto [it, inserted] =
      word_ids_.emplace(std::string(word), static_cast<WordId>(words_.size()));
  if (inserted) {
    words_.emplace_back(word);
    word_cf_.push_back(0);
    word_postings_.emplace_back();
  }
  return it->second;
}

std::optional<WordId> CorpusStats::find_word(std::string_view word) const {
  auto it = word_ids_.find(std::string(word));
  if (it == word_ids_.end()) return std::nullopt;
  return it->second;
}

void CorpusStats::add(const DocKeyphrases& keyphrases,
                      std::span<const text::Segment> segments) {
  DocTerms terms;
  terms.phrases = keyphrases.phrase_counts;
  terms.length = keyphrases.length;
  std::map<WordId, uint32_t> counts;
  for (const auto& seg : segments) {
    for (const auto& tok : seg) {
      counts[intern(tok)] += 1;
      ++terms.word_total;
    }
  }
  terms.words.assign(counts.begin(), counts.end());
  add(std::move(terms));
}

void CorpusStats::add(DocTerms terms) {
  const auto d = static_cast<DocIndex>(docs_.size());
  for (const auto& [q, c] : terms.phrases) {
    phrase_cf_[q] += c;
    phrase_postings_[q].push_back({d, c});
  }
  for (const auto& [w, c] : terms.words) {
    word_cf_[w] += c;
    word_postings_[w].push_back({d, c});
  }
  total_length_ += terms.length;
  total_words_ += terms.word_total;
  docs_.push_back(std::move(terms));
}

double smoothed_probability(uint64_t count_in_doc, uint64_t doc_length,
                            uint64_t count_in_corpus, uint64_t corpus_length,
                            double mu) {
  if (corpus_length == 0) {
    throw Error(ErrorCode::kEmptyModel, "empty corpus: no language model");
  }
  const auto len = static_cast<double>(doc_length);
  const double lambda = len / (len + mu);
  const double doc_term =
      doc_length == 0 ? 0.0 : static_cast<double>(count_in_doc) / len;
  const double corpus_term =
      static_cast<double>(count_in_corpus) / static_cast<double>(corpus_length);
  return lambda * doc_term + (1.0 - lambda) * corpus_term;
}

double p_phrase_given_doc(const CorpusStats& stats, PhraseId q, DocIndex d,
                          const LmConfig& cfg) {
  const DocTerms& t = stats.doc(d);
  return smoothed_probability(t.phrase_count(q), t.length, stats.phrase_cf(q),
                              stats.total_length(), cfg.mu);
}

double p_word_given_doc(const CorpusStats& stats, std::string_view word,
                        DocIndex d, const LmConfig& cfg) {
  const DocTerms& t = stats.doc(d);
  auto w = stats.find_word(word);
  const uint32_t c_d = w ? t.word_count(*w) : 0;
  const uint64_t c_D = w ? stats.word_cf(*w) : 0;
  return smoothed_probability(c_d, t.length, c_D, stats.total_length(), cfg.mu);
}

double log_p_words_given_doc(const CorpusStats& stats,
                             std::span<const std::string> words, DocIndex d,
                             const LmConfig& cfg) {
  if (words.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "empty word query");
  }
  double log_p = 0.0;
  for (const std::string& w : words) {
    const double p = p_word_given_doc(stats, w, d, cfg);
    if (p <= 0.0) return -std::numeric_limits<double>::infinity();
    log_p += std::log(p);
  }
  return log_p;
}

double p_words_given_doc(const CorpusStats& stats,
                         std::span<const std::string> words, DocIndex d,
                         const LmConfig& cfg) {
  return std::exp(log_p_words_given_doc(stats, words, d, cfg));
}

nlohmann::json export_stats(const CorpusStats& stats, const CandidateLexicon& lexicon,
                            const Corpus& corpus) {
  nlohmann::json phrases = nlohmann::json::array();
  for (PhraseId q = 0; q < lexicon.size(); ++q) {
    if (stats.phrase_cf(q) == 0) continue;
    phrases.push_back({{"phrase", lexicon.phrase(q)},
                       {"cD", stats.phrase_cf(q)},
                       {"postings", postings_json(stats.phrase_postings(q), corpus)}});
  }
  std::vector<WordId> order(stats.vocabulary_size());
  for (WordId w = 0; w < order.size(); ++w) order[w] = w;
  std::sort(order.begin(), order.end(),
            [&](WordId a, WordId b) { return stats.word(a) < stats.word(b); });
  nlohmann::json words = nlohmann::json::array();
  for (WordId w : order) {
    words.push_back({{"word", stats.word(w)},
                     {"cD", stats.word_cf(w)},
                     {"postings", postings_json(stats.word_postings(w), corpus)}});
  }
  return {{"total_length", stats.total_length()},
          {"total_words", stats.total_words()},
          {"phrases", std::move(phrases)},
          {"words", std::move(words)}};
}

}  // namespace seerkit
