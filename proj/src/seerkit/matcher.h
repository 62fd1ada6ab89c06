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
#include <map>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "seerkit/candidates.h"
#include "seerkit/corpus.h"
#include "seerkit/text.h"

namespace seerkit {

// Token-level trie over lexicon phrases. Lexicon tokens are interned, so a
// document token missing from the lexicon vocabulary fails at the first hash
// probe. Edges live in one flat map keyed by (node, token).
class PhraseTrie {
 public:
  struct Match {
    PhraseId phrase;
    size_t length;  // tokens consumed
  };

  PhraseTrie() : terminal_(1, kNoPhrase) {}
  explicit PhraseTrie(const CandidateLexicon& lexicon);

  // Longest lexicon phrase that is a prefix of tokens[pos..].
  std::optional<Match> longest_match(std::span<const std::string> tokens,
                                     size_t pos) const;

  bool contains(std::span<const std::string> phrase) const;

  size_t node_count() const { return terminal_.size(); }
  size_t max_depth() const { return max_depth_; }

 private:
  static constexpr int64_t kNoPhrase = -1;

  static uint64_t edge_key(uint32_t node, uint32_t token) {
    return (static_cast<uint64_t>(node) << 32) | token;
  }
  std::optional<uint32_t> child(uint32_t node, const std::string& token) const;

  std::unordered_map<std::string, uint32_t> token_ids_;
  std::unordered_map<uint64_t, uint32_t> edges_;
  std::vector<int64_t> terminal_;  // phrase id per node, kNoPhrase otherwise
  size_t max_depth_ = 0;
};

// Normalized token segments of a document, title first. Title and abstract
// never share a segment.
std::vector<text::Segment> normalize_document(const Document& doc);

struct DocKeyphrases {
  std::string doc_id;
  std::vector<std::pair<PhraseId, uint32_t>> phrase_counts;  // by phrase id
  std::vector<std::string> residual;  // unmatched tokens, in order
  uint32_t length = 0;       // |d|: matched occurrences + residual words
  uint32_t token_count = 0;  // all normalized tokens of title + abstract

  uint32_t count(PhraseId id) const;
  size_t distinct_phrases() const { return phrase_counts.size(); }
};

// Greedy left-to-right scan taking the longest lexicon match at each
// position, otherwise emitting one residual word.
DocKeyphrases extract_keyphrases(std::string doc_id,
                                 std::span<const text::Segment> segments,
                                 const PhraseTrie& trie);
DocKeyphrases extract_keyphrases(const Document& doc, const PhraseTrie& trie);

struct CoverageStats {
  size_t documents = 0;  // documents passing the length filters
  double min = 0, q1 = 0, median = 0, mean = 0, q3 = 0, max = 0;
  std::map<size_t, double> pmf;  // distinct keyphrase count -> fraction
};

// Distribution of distinct keyphrases per document over documents whose
// title / abstract have at least the given number of words. Quartiles
// interpolate linearly between order statistics.
CoverageStats keyphrase_count_stats(const Corpus& corpus, const PhraseTrie& trie,
                                    size_t min_title_words = 0,
                                    size_t min_abstract_words = 0);

CoverageStats summarize_counts(std::vector<size_t> counts);

nlohmann::json to_json(const CoverageStats& stats);

}  // namespace seerkit
