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

#include "seerkit/api.h"

#include <algorithm>

#include "seerkit/error.h"
#include "seerkit/eval.h"

namespace seerkit::api {
namespace {

nlohmann::json support_json(const Index& index, const std::vector<SupportDoc>& docs) {
  nlohmann::json out = nlohmann::json::array();
  for (const SupportDoc& s : docs) {
    const Document& doc = index.corpus().doc(s.doc);
    out.push_back({{"id", doc.id},
                   {"title", doc.title},
                   {"citations", index.corpus().in_citations(s.doc)},
                   {"p", s.p}});
  }
  return out;
}

nlohmann::json query_json(const Query& q) {
  return {{"raw", q.raw}, {"normalized", q.normalized}, {"in_lexicon", q.in_lexicon}};
}

nlohmann::json author_entry(const Index& index, AuthorIndex a, double score) {
  const Author& author = index.corpus().author(a);
  return {{"id", author.id}, {"name", author.display_name}, {"score", score}};
}

nlohmann::json phrase_entry(const Index& index, PhraseId t, double score) {
  const std::string& phrase = index.lexicon().phrase(t);
  return {{"id", phrase}, {"name", phrase}, {"score", score}};
}

}  // namespace

nlohmann::json experts_response(const Index& index, std::string_view query, size_t k) {
  const RankConfig cfg = RankConfig::from(index.config());
  const Query q = make_query(query, index.lexicon());
  std::vector<ScoredDoc> d1;
  const RankedList list = rank_experts(index, q, k, cfg, &d1);
  nlohmann::json results = nlohmann::json::array();
  for (const RankedEntry& e : list) {
    nlohmann::json entry = author_entry(index, e.id, e.score);
    entry["support"] = support_json(
        index, expert_support(index, q, e.id, cfg, kSupportDocs, q.in_lexicon ? nullptr : &d1));
    results.push_back(std::move(entry));
  }
  nlohmann::json related = nlohmann::json::array();
  if (q.in_lexicon) {
    for (const RankedEntry& e : rank_related(index, *q.phrase, kRelatedInExpertResponse, cfg)) {
      related.push_back({{"phrase", index.lexicon().phrase(e.id)}, {"score", e.score}});
    }
  }
  return {{"query", query_json(q)},
          {"k", k},
          {"results", std::move(results)},
          {"related", std::move(related)}};
}

nlohmann::json expertise_response(const Index& index, std::string_view author, size_t k) {
  const RankConfig cfg = RankConfig::from(index.config());
  const AuthorIndex a = resolve_author(index.corpus(), author);
  const RankedList list = rank_expertise(index, a, k, cfg);
  nlohmann::json results = nlohmann::json::array();
  for (const RankedEntry& e : list) {
    nlohmann::json entry = phrase_entry(index, e.id, e.score);
    entry["support"] =
        support_json(index, expertise_support(index, a, e.id, cfg, kSupportDocs));
    results.push_back(std::move(entry));
  }
  const Author& info = index.corpus().author(a);
  uint64_t citations = 0;
  for (DocIndex d : info.docs) citations += index.corpus().in_citations(d);
  return {{"query", {{"raw", std::string(author)}}},
          {"author",
           {{"id", info.id},
            {"name", info.display_name},
            {"documents", info.docs.size()},
            {"citations", citations}}},
          {"k", k},
          {"results", std::move(results)}};
}

nlohmann::json related_response(const Index& index, std::string_view query, size_t k) {
  const RankConfig cfg = RankConfig::from(index.config());
  const Query q = make_query(query, index.lexicon());
  const RankedList list = rank_related(index, q, k, cfg);
  nlohmann::json results = nlohmann::json::array();
  for (const RankedEntry& e : list) {
    nlohmann::json entry = phrase_entry(index, e.id, e.score);
    entry["support"] =
        support_json(index, related_support(index, *q.phrase, e.id, cfg, kSupportDocs));
    results.push_back(std::move(entry));
  }
  return {{"query", query_json(q)}, {"k", k}, {"results", std::move(results)}};
}

nlohmann::json gs_star_response(const Index& index, std::string_view query, size_t k) {
  const RankConfig cfg = RankConfig::from(index.config());
  const Query q = make_query(query, index.lexicon());
  nlohmann::json results = nlohmann::json::array();
  for (const RankedEntry& e : gs_star_rank(index, q, k, cfg)) {
    results.push_back(author_entry(index, e.id, e.score));
  }
  return {{"query", query_json(q)}, {"k", k}, {"results", std::move(results)}};
}

nlohmann::json info_response(const Index& index) {
  return {{"documents", index.corpus().size()},
          {"authors", index.corpus().author_count()},
          {"lexicon_size", index.lexicon().size()},
          {"total_length", index.stats().total_length()},
          {"mu", index.config().lm.mu},
          {"top_n", index.config().oov.top_n}};
}

std::string keyphrase_dump(const Index& index) {
  const CorpusStats& stats = index.stats();
  std::string out;
  for (DocIndex d = 0; d < stats.doc_count(); ++d) {
    const DocTerms& terms = stats.doc(d);
    std::vector<std::pair<std::string, uint32_t>> phrases;
    for (const auto& [id, c] : terms.phrases) phrases.emplace_back(index.lexicon().phrase(id), c);
    std::sort(phrases.begin(), phrases.end());
    nlohmann::json list = nlohmann::json::array();
    for (const auto& [p, c] : phrases) list.push_back({{"p", p}, {"c", c}});
    out += nlohmann::json{{"id", index.corpus().doc(d).id},
                          {"phrases", std::move(list)},
                          {"len", terms.length}}
               .dump();
    out += '\n';
  }
  return out;
}

nlohmann::json coverage_response(const Index& index, size_t min_title_words,
                                 size_t min_abstract_words) {
  nlohmann::json out = to_json(keyphrase_count_stats(index.corpus(), index.trie(),
                                                     min_title_words, min_abstract_words));
  out["min_title_words"] = min_title_words;
  out["min_abstract_words"] = min_abstract_words;
  return out;
}

std::vector<Document> parse_document_batch(const nlohmann::json& body) {
  const nlohmann::json* records = &body;
  if (body.is_object()) {
    if (!body.contains("documents")) {
      throw Error(ErrorCode::kParse, "expected {\"documents\": [...]} or an array");
    }
    records = &body["documents"];
  }
  if (!records->is_array()) {
    throw Error(ErrorCode::kParse, "documents must be a JSON array");
  }
  std::vector<Document> docs;
  size_t i = 0;
  for (const auto& rec : *records) {
    try {
      docs.push_back(parse_document(rec));
    } catch (const Error& e) {
      throw Error(ErrorCode::kParse,
                  "document " + std::to_string(i) + ": " + e.what());
    }
    ++i;
  }
  return docs;
}

}  // namespace seerkit::api
