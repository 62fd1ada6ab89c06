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

// Keyphrase candidate compilation: encyclopedia titles and intro anchors
// under a set of root categories, plus frequent title n-grams of the corpus.

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "seerkit/corpus.h"

namespace seerkit {

using PhraseId = uint32_t;
using Phrase = std::vector<std::string>;  // normalized tokens

// Longer phrases are dropped; bounds trie depth.
inline constexpr size_t kMaxPhraseTokens = 8;

// Token sequence of `raw` under the shared normalization rule, or nullopt
// when nothing is left (the input was empty or all punctuation).
std::optional<Phrase> normalize_phrase(std::string_view raw);

// normalize_phrase joined with single spaces; empty string for non-phrases.
std::string normalize_phrase_key(std::string_view raw);

struct WikiPage {
  std::string title;
  std::vector<std::string> categories;
  std::vector<std::string> intro_link_texts;
};

struct CategoryEdge {
  std::string parent;
  std::string child;
};

// Category names compare case-insensitively with '_' read as a space.
std::string category_key(std::string_view name);

class CategoryGraph {
 public:
  CategoryGraph() = default;
  CategoryGraph(std::span<const WikiPage> pages,
                std::span<const CategoryEdge> edges);

  bool has_category(std::string_view name) const;

  // Shortest hop count from `root` for every category within `max_depth`.
  // Cycles are fine; each category is visited once.
  std::unordered_map<std::string, int> depths_from(std::string_view root,
                                                   int max_depth) const;

  // Page indices filed directly under a category.
  const std::vector<size_t>& members(const std::string& key) const;

 private:
  std::unordered_map<std::string, std::vector<std::string>> children_;
  std::unordered_map<std::string, std::vector<size_t>> members_;
  std::set<std::string> categories_;
};

struct RootSpec {
  std::string category;
  int max_depth = 0;

  bool operator==(const RootSpec&) const = default;
};

// Primary discipline three levels deep, two auxiliary ones two levels deep.
std::vector<RootSpec> default_roots();

// Parses "name:depth,name:depth". Throws Error(kConfig) on bad syntax.
std::vector<RootSpec> parse_roots(std::string_view spec);

struct HarvestResult {
  std::set<std::string> phrases;  // joined normalized phrases
  std::vector<std::string> warnings;
};

HarvestResult harvest_wiki(std::span<const WikiPage> pages,
                           const CategoryGraph& graph,
                           std::span<const RootSpec> roots);

std::vector<WikiPage> read_wiki_dump(const std::string& path);
std::vector<CategoryEdge> read_category_edges(const std::string& path);

// Normalized 2-, 3- and 4-grams of document titles occurring at least
// `min_count` times corpus-wide. Never crosses a punctuation boundary.
std::set<std::string> mine_title_ngrams(const Corpus& corpus, int min_count = 3);

enum class Provenance : uint8_t { kWiki = 1, kNgram = 2, kBoth = 3 };

const char* provenance_name(Provenance p);

// Sorted, duplicate-free set of normalized phrases. Phrase ids are positions
// in lexicographic order and stay stable for the lifetime of an engine.
class CandidateLexicon {
 public:
  CandidateLexicon() = default;

  static CandidateLexicon build(const std::set<std::string>& wiki_phrases,
                                const std::set<std::string>& ngram_phrases);

  size_t size() const { return phrases_.size(); }
  bool empty() const { return phrases_.empty(); }

  const std::string& phrase(PhraseId id) const { return phrases_[id]; }
  const Phrase& tokens(PhraseId id) const { return tokens_[id]; }
  Provenance provenance(PhraseId id) const { return provenance_[id]; }
  std::optional<PhraseId> find(std::string_view joined) const;

  const std::vector<std::string>& phrases() const { return phrases_; }

  // Writes `<stem>.txt` (one phrase per line, sorted) and the provenance
  // sidecar `<stem>.provenance` (one tag per line, same order).
  void save(const std::string& txt_path, const std::string& provenance_path) const;

  // Reads a phrase-per-line file. Lines are normalized, so a hand-written
  // list works too. Without a sidecar every phrase is tagged wiki.
  static CandidateLexicon load(const std::string& txt_path,
                               const std::string& provenance_path = "",
                               std::vector<std::string>* warnings = nullptr);

 private:
  void index();

  std::vector<std::string> phrases_;
  std::vector<Phrase> tokens_;
  std::vector<Provenance> provenance_;
  std::unordered_map<std::string, PhraseId> ids_;
};

}  // namespace seerkit
