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

#include "seerkit/matcher.h"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace seerkit {

PhraseTrie::PhraseTrie(const CandidateLexicon& lexicon) : terminal_(1, kNoPhrase) {
  for (PhraseId id = 0; id < lexicon.size(); ++id) {
    const Phrase& tokens = lexicon.tokens(id);
    uint32_t node = 0;
    for (const std::string& tok : tokens) {
      auto [tid_it, _] =
          token_ids_.emplace(tok, static_cast<uint32_t>(token_ids_.size()));
      const uint64_t key = edge_key(node, tid_it->second);
      auto it = edges_.find(key);
      if (it == edges_.end()) {
        const auto next = static_cast<uint32_t>(terminal_.size());
        terminal_.push_back(kNoPhrase);
        it = edges_.emplace(key, next).first;
      }
      node = it->second;
    }
    terminal_[node] = id;
    max_depth_ = std::max(max_depth_, tokens.size());
  }
}

std::optional<uint32_t> PhraseTrie::child(uint32_t node,
                                          const std::string& token) const {
  auto tid = token_ids_.find(token);
  if (tid == token_ids_.end()) return std::nullopt;
  auto it = edges_.find(edge_key(node, tid->second));
  if (it == edges_.end()) return std::nullopt;
  return it->second;
}

std::optional<PhraseTrie::Match> PhraseTrie::longest_match(
    std::span<const std::string> tokens, size_t pos) const {
  std::optional<Match> best;
  uint32_t node = 0;
  for (size_t i = pos; i < tokens.size(); ++i) {
    auto next = child(node, tokens[i]);
    if (!next) break;
    node = *next;
    if (terminal_[node] != kNoPhrase) {
      best = Match{static_cast<PhraseId>(terminal_[node]), i - pos + 1};
    }
  }
  return best;
}

bool PhraseTrie::contains(std::span<const std::string> phrase) const {
  if (phrase.empty()) return false;
  uint32_t node = 0;
  for (const std::string& tok : phrase) {
    auto next = child(node, tok);
    if (!next) return false;
    node = *next;
  }
  return terminal_[node] != kNoPhrase;
}

std::vector<text::Segment> normalize_document(const Document& doc) {
  std::vector<text::Segment> segs = text::normalize_segments(doc.title);
  for (auto& seg : text::normalize_segments(doc.abstract)) {
    segs.push_back(std::move(seg));
  }
  return segs;
}

uint32_t DocKeyphrases::count(PhraseId id) const {
  auto it = std::lower_bound(
      phrase_counts.begin(), phrase_counts.end(), id,
      [](const auto& entry, PhraseId v) { return entry.first < v; });
  return (it != phrase_counts.end() && it->first == id) ? it->second : 0;
}

DocKeyphrases extract_keyphrases(std::string doc_id,
                                 std::span<const text::Segment> segments,
                                 const PhraseTrie& trie) {
  DocKeyphrases out;
  out.doc_id = std::move(doc_id);
  std::vector<PhraseId> matched;
  for (const text::Segment& seg : segments) {
    out.token_count += static_cast<uint32_t>(seg.size());
    size_t pos = 0;
    while (pos < seg.size()) {
      if (auto m = trie.longest_match(seg, pos)) {
        matched.push_back(m->phrase);
        pos += m->length;
      } else {
        out.residual.push_back(seg[pos]);
        ++pos;
      }
    }
  }
  std::sort(matched.begin(), matched.end());
  for (PhraseId id : matched) {
    if (!out.phrase_counts.empty() && out.phrase_counts.back().first == id) {
      ++out.phrase_counts.back().second;
    } else {
      out.phrase_counts.emplace_back(id, 1);
    }
  }
  out.length = static_cast<uint32_t>(matched.size() + out.residual.size());
  return out;
}

DocKeyphrases extract_keyphrases(const Document& doc, const PhraseTrie& trie) {
  const auto segments = normalize_document(doc);
  return extract_keyphrases(doc.id, segments, trie);
}

CoverageStats summarize_counts(std::vector<size_t> counts) {
  CoverageStats s;
  s.documents = counts.size();
  if (counts.empty()) return s;
  std::sort(counts.begin(), counts.end());
  const size_t n = counts.size();
  auto quantile = [&](double p) {
    const double h = (static_cast<double>(n) - 1.0) * p;
    const auto lo = static_cast<size_t>(std::floor(h));
    const size_t hi = std::min(lo + 1, n - 1);
    return static_cast<double>(counts[lo]) +
           (h - static_cast<double>(lo)) *
               (static_cast<double>(counts[hi]) - static_cast<double>(counts[lo]));
  };
  s.min = static_cast<double>(counts.front());
  s.max = static_cast<double>(counts.back());
  s.q1 = quantile(0.25);
  s.median = quantile(0.5);
  s.q3 = quantile(0.75);
  s.mean = static_cast<double>(std::accumulate(counts.begin(), counts.end(),
                                               uint64_t{0})) /
           static_cast<double>(n);
  for (size_t c : counts) s.pmf[c] += 1.0;
  for (auto& [c, mass] : s.pmf) mass /= static_cast<double>(n);
  return s;
}

CoverageStats keyphrase_count_stats(const Corpus& corpus, const PhraseTrie& trie,
                                    size_t min_title_words,
                                    size_t min_abstract_words) {
  std::vector<size_t> counts;
  for (const Document& doc : corpus.docs()) {
    if (text::count_words(doc.title) < min_title_words) continue;
    if (text::count_words(doc.abstract) < min_abstract_words) continue;
    counts.push_back(extract_keyphrases(doc, trie).distinct_phrases());
  }
  return summarize_counts(std::move(counts));
}

nlohmann::json to_json(const CoverageStats& s) {
  nlohmann::json pmf = nlohmann::json::array();
  for (const auto& [c, mass] : s.pmf) pmf.push_back({{"count", c}, {"fraction", mass}});
  return {{"documents", s.documents}, {"min", s.min},       {"q1", s.q1},
          {"median", s.median},       {"mean", s.mean},     {"q3", s.q3},
          {"max", s.max},             {"pmf", pmf}};
}

}  // namespace seerkit
