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
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include <json.hpp>

namespace seerkit {

using DocIndex = uint32_t;
using AuthorIndex = uint32_t;

struct Document {
  std::string id;
  std::string title;
  std::string abstract;
  std::vector<std::string> authors;  // raw surface forms, in byline order
  std::optional<int> year;
  std::vector<std::string> citations;  // outgoing, may dangle

  bool operator==(const Document&) const = default;
};

struct Author {
  std::string id;            // normalize_name key
  std::string display_name;  // most frequent surface form
  std::vector<DocIndex> docs;
};

// One entry of an ingestion report: a rejected record or a dropped field.
struct IngestIssue {
  size_t line = 0;  // 1-based line in the source file, 0 when not from a file
  std::string id;
  std::string reason;

  bool operator==(const IngestIssue&) const = default;
};

using IngestReport = std::vector<IngestIssue>;

nlohmann::json to_json(const IngestReport& report);

// Lowercased "<first initial> <last name>": punctuation is stripped from each
// whitespace token, middle tokens are dropped and a single token stands alone.
// Throws Error(kUnusableName) when nothing is left.
std::string normalize_name(std::string_view raw_name);

// ln(1 + in-citation count).
double citation_weight_for_count(uint64_t in_citations);

// Parses one corpus line. Throws Error(kParse) with a reason on malformed
// records.
Document parse_document(std::string_view json_line);
Document parse_document(const nlohmann::json& record);
inline Document parse_document(const char* json_line) {
  return parse_document(std::string_view(json_line));
}
nlohmann::json document_to_json(const Document& doc);

// Documents, authors and the citation table. Only grows: documents are
// never removed or edited once added.
class Corpus {
 public:
  Corpus() = default;

  // Adds a document, registering its authors and citations. Throws
  // Error(kDuplicate) if the id is taken. Unusable author names are skipped
  // and reported through `issues` when given.
  DocIndex add(Document doc, IngestReport* issues = nullptr,
               size_t line = 0);

  size_t size() const { return docs_.size(); }
  bool empty() const { return docs_.empty(); }

  const Document& doc(DocIndex d) const { return docs_[d]; }
  const std::vector<Document>& docs() const { return docs_; }
  std::optional<DocIndex> find(std::string_view doc_id) const;
  bool contains(std::string_view doc_id) const { return find(doc_id).has_value(); }

  // Distinct normalized authors of a document, in byline order.
  const std::vector<AuthorIndex>& doc_authors(DocIndex d) const {
    return doc_authors_[d];
  }

  size_t author_count() const { return authors_.size(); }
  const Author& author(AuthorIndex a) const { return authors_[a]; }
  std::optional<AuthorIndex> find_author(std::string_view author_id) const;

  uint32_t in_citations(DocIndex d) const { return in_citations_[d]; }
  // Throws Error(kNotFound) for unknown ids.
  uint32_t in_citations(std::string_view doc_id) const;
  double citation_weight(DocIndex d) const {
    return citation_weight_for_count(in_citations_[d]);
  }
  double citation_weight(std::string_view doc_id) const;

  // Number of citation edges whose target exists in the corpus.
  uint64_t resolved_citation_edges() const;

  // doc_id -> in-citation count, ordered by id.
  std::map<std::string, uint32_t> citation_table() const;

  // Documents whose in-citation count changed during the last add() call,
  // including the added document itself when it was already cited.
  const std::vector<DocIndex>& last_cited() const { return last_cited_; }

 private:
  void refresh_display_name(AuthorIndex a);

  std::vector<Document> docs_;
  std::unordered_map<std::string, DocIndex> by_id_;
  std::vector<uint32_t> in_citations_;
  // Citations to ids not (yet) in the corpus, kept so a later arrival
  // receives the counts a from-scratch build would give it.
  std::unordered_map<std::string, uint32_t> pending_citations_;

  std::vector<Author> authors_;
  std::unordered_map<std::string, AuthorIndex> author_by_id_;
  std::vector<std::map<std::string, uint32_t>> surface_counts_;
  std::vector<std::vector<AuthorIndex>> doc_authors_;

  std::vector<DocIndex> last_cited_;
};

enum class CorpusFormat { kJsonLines };

struct IngestResult {
  Corpus corpus;
  IngestReport report;
};

// Loads a JSON-lines corpus file. Malformed records and duplicate ids are
// skipped and reported; an unreadable file throws Error(kIo).
IngestResult ingest_corpus(const std::string& path,
                           CorpusFormat format = CorpusFormat::kJsonLines);

// Parses every line strictly: any malformed record throws Error(kParse)
// naming the line. Used for update batches, which are all-or-nothing.
std::vector<Document> read_documents_strict(const std::string& path);

}  // namespace seerkit
