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

#include "seerkit/update.h"

#include <unordered_set>

#include "seerkit/error.h"

namespace seerkit {

nlohmann::json to_json(const UpdateSummary& s) {
  return {{"documents_added", s.documents_added},
          {"authors_added", s.authors_added},
          {"authors_touched", s.authors_touched},
          {"phrases_touched", s.phrases_touched},
          {"citations_incremented", s.citations_incremented},
          {"issues", to_json(s.issues)}};
}

UpdateBatch prepare_update(const Index& index, std::vector<Document> documents) {
  const Corpus& corpus = index.corpus();
  std::unordered_set<std::string> seen;
  for (const Document& doc : documents) {
    if (corpus.contains(doc.id)) {
      throw Error(ErrorCode::kDuplicate, "document '" + doc.id + "' already exists");
    }
    if (!seen.insert(doc.id).second) {
      throw Error(ErrorCode::kDuplicate, "document '" + doc.id + "' repeats in batch");
    }
  }
  UpdateBatch batch;
  for (const Document& doc : documents) {
    DocKeyphrases kp = extract_keyphrases(doc, index.trie());
    for (const auto& [q, c] : kp.phrase_counts) batch.touched_phrases.insert(q);
    for (const std::string& raw : doc.authors) {
      try {
        batch.touched_authors.insert(normalize_name(raw));
      } catch (const Error&) {
      }
    }
    std::unordered_set<std::string> cited;
    for (const std::string& target : doc.citations) {
      if (!cited.insert(target).second) continue;
      if (corpus.contains(target) || seen.contains(target)) {
        batch.citation_increments[target] += 1;
      }
    }
    batch.keyphrases.push_back(std::move(kp));
  }
  batch.documents = std::move(documents);
  return batch;
}

std::shared_ptr<Index> apply_update(const Index& base, const UpdateBatch& batch,
                                    UpdateSummary* summary) {
  auto next = std::make_shared<Index>(base);
  const size_t authors_before = base.corpus().author_count();
  const uint64_t edges_before = base.corpus().resolved_citation_edges();
  std::set<AuthorIndex> touched_authors;
  std::set<PhraseId> touched_phrases;
  UpdateSummary s;
  for (const Document& doc : batch.documents) {
    next->add_document(doc, &s.issues, &touched_authors, &touched_phrases);
  }
  next->refresh_authors(touched_authors);
  s.documents_added = batch.documents.size();
  s.authors_added = next->corpus().author_count() - authors_before;
  s.authors_touched = touched_authors.size();
  s.phrases_touched = touched_phrases.size();
  s.citations_incremented = next->corpus().resolved_citation_edges() - edges_before;
  if (summary) *summary = std::move(s);
  return next;
}

}  // namespace seerkit
