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

#include "seerkit/corpus.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <unordered_set>

#include "seerkit/error.h"
#include "seerkit/text.h"

namespace seerkit {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kIo: return "io";
    case ErrorCode::kConfig: return "config";
    case ErrorCode::kParse: return "parse";
    case ErrorCode::kAlreadyExists: return "already_exists";
    case ErrorCode::kInvalidArgument: return "invalid_argument";
    case ErrorCode::kNotFound: return "not_found";
    case ErrorCode::kNotInLexicon: return "not_in_lexicon";
    case ErrorCode::kDuplicate: return "duplicate";
    case ErrorCode::kEmptyModel: return "empty_model";
    case ErrorCode::kUnusableName: return "unusable_name";
  }
  return "unknown";
}

namespace {

bool is_name_space(std::string_view s, size_t i, size_t* width) {
  const char c = s[i];
  if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
      c == '\v') {
    *width = 1;
    return true;
  }
  // U+00A0 no-break space.
  if (static_cast<unsigned char>(c) == 0xC2 && i + 1 < s.size() &&
      static_cast<unsigned char>(s[i + 1]) == 0xA0) {
    *width = 2;
    return true;
  }
  return false;
}

std::vector<std::string_view> split_whitespace(std::string_view s) {
  std::vector<std::string_view> out;
  size_t i = 0;
  size_t start = 0;
  while (i < s.size()) {
    size_t width = 0;
    if (is_name_space(s, i, &width)) {
      if (i > start) out.push_back(s.substr(start, i - start));
      i += width;
      start = i;
    } else {
      ++i;
    }
  }
  if (start < s.size()) out.push_back(s.substr(start));
  return out;
}

// Folds, lowercases and drops every non-word character of one name token.
std::string strip_name_token(std::string_view token) {
  std::string out;
  for (const auto& seg : text::segment_words(token)) {
    for (const auto& t : seg) out += t;
  }
  return out;
}

size_t utf8_first_cp_length(std::string_view s) {
  const auto b0 = static_cast<unsigned char>(s[0]);
  size_t n = 1;
  if ((b0 & 0xE0) == 0xC0) n = 2;
  else if ((b0 & 0xF0) == 0xE0) n = 3;
  else if ((b0 & 0xF8) == 0xF0) n = 4;
  return std::min(n, s.size());
}

std::string string_field(const nlohmann::json& rec, const char* key) {
  auto it = rec.find(key);
  if (it == rec.end() || it->is_null()) return {};
  if (!it->is_string()) {
    throw Error(ErrorCode::kParse, std::string("field '") + key +
                                       "' must be a string");
  }
  return it->get<std::string>();
}

std::vector<std::string> string_list_field(const nlohmann::json& rec,
                                           const char* key) {
  std::vector<std::string> out;
  auto it = rec.find(key);
  if (it == rec.end() || it->is_null()) return out;
  if (!it->is_array()) {
    throw Error(ErrorCode::kParse, std::string("field '") + key +
                                       "' must be an array of strings");
  }
  for (const auto& v : *it) {
    if (!v.is_string()) {
      throw Error(ErrorCode::kParse, std::string("field '") + key +
                                         "' must contain only strings");
    }
    out.push_back(v.get<std::string>());
  }
  return out;
}

std::string id_of(const nlohmann::json& rec) {
  if (rec.is_object()) {
    auto it = rec.find("id");
    if (it != rec.end() && it->is_string()) return it->get<std::string>();
  }
  return {};
}

bool is_blank(std::string_view line) {
  return std::all_of(line.begin(), line.end(), [](char c) {
    return c == ' ' || c == '\t' || c == '\r' || c == '\n';
  });
}

void strip_bom(std::string& line) {
  if (line.size() >= 3 && static_cast<unsigned char>(line[0]) == 0xEF &&
      static_cast<unsigned char>(line[1]) == 0xBB &&
      static_cast<unsigned char>(line[2]) == 0xBF) {
    line.erase(0, 3);
  }
}

}  // namespace

nlohmann::json to_json(const IngestReport& report) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& issue : report) {
    out.push_back(
        {{"line", issue.line}, {"id", issue.id}, {"reason", issue.reason}});
  }
  return out;
}

std::string normalize_name(std::string_view raw_name) {
  std::vector<std::string> tokens;
  for (std::string_view tok : split_whitespace(raw_name)) {
    std::string stripped = strip_name_token(tok);
    if (!stripped.empty()) tokens.push_back(std::move(stripped));
  }
  if (tokens.empty()) {
    throw Error(ErrorCode::kUnusableName,
                "unusable author name '" + std::string(raw_name) + "'");
  }
  if (tokens.size() == 1) return tokens.front();
  const std::string& first = tokens.front();
  return first.substr(0, utf8_first_cp_length(first)) + " " + tokens.back();
}

double citation_weight_for_count(uint64_t in_citations) {
  return std::log1p(static_cast<double>(in_citations));
}

Document parse_document(const nlohmann::json& rec) {
  if (!rec.is_object()) {
    throw Error(ErrorCode::kParse, "record is not a JSON object");
  }
  Document doc;
  auto id = rec.find("id");
  if (id == rec.end() || !id->is_string() || id->get<std::string>().empty()) {
    throw Error(ErrorCode::kParse, "missing or empty 'id'");
  }
  doc.id = id->get<std::string>();
  doc.title = string_field(rec, "title");
  doc.abstract = string_field(rec, "abstract");
  doc.authors = string_list_field(rec, "authors");
  doc.citations = string_list_field(rec, "citations");
  auto year = rec.find("year");
  if (year != rec.end() && !year->is_null()) {
    if (!year->is_number_integer()) {
      throw Error(ErrorCode::kParse, "field 'year' must be an integer or null");
    }
    doc.year = year->get<int>();
  }
  return doc;
}

Document parse_document(std::string_view json_line) {
  nlohmann::json rec;
  try {
    rec = nlohmann::json::parse(json_line);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::kParse, std::string("invalid JSON: ") + e.what());
  }
  return parse_document(rec);
}

nlohmann::json document_to_json(const Document& doc) {
  nlohmann::json out = {{"id", doc.id},
                        {"title", doc.title},
                        {"abstract", doc.abstract},
                        {"authors", doc.authors},
                        {"citations", doc.citations}};
  out["year"] = doc.year ? nlohmann::json(*doc.year) : nlohmann::json(nullptr);
  return out;
}

DocIndex Corpus::add(Document doc, IngestReport* issues, size_t line) {
  if (by_id_.count(doc.id)) {
    throw Error(ErrorCode::kDuplicate, "duplicate document id '" + doc.id + "'");
  }
  last_cited_.clear();
  const auto d = static_cast<DocIndex>(docs_.size());
  by_id_.emplace(doc.id, d);

  uint32_t pending = 0;
  if (auto it = pending_citations_.find(doc.id); it != pending_citations_.end()) {
    pending = it->second;
    pending_citations_.erase(it);
  }
  in_citations_.push_back(pending);
  if (pending > 0) last_cited_.push_back(d);

  std::vector<AuthorIndex> authors;
  for (const std::string& raw : doc.authors) {
    std::string key;
    try {
      key = normalize_name(raw);
    } catch (const Error& e) {
      if (issues) issues->push_back({line, doc.id, e.what()});
      continue;
    }
    AuthorIndex a;
    if (auto it = author_by_id_.find(key); it != author_by_id_.end()) {
      a = it->second;
    } else {
      a = static_cast<AuthorIndex>(authors_.size());
      authors_.push_back(Author{key, raw, {}});
      surface_counts_.emplace_back();
      author_by_id_.emplace(key, a);
    }
    surface_counts_[a][raw] += 1;
    refresh_display_name(a);
    if (std::find(authors.begin(), authors.end(), a) == authors.end()) {
      authors.push_back(a);
      authors_[a].docs.push_back(d);
    }
  }
  doc_authors_.push_back(std::move(authors));

  std::unordered_set<std::string> seen;
  for (const std::string& target : doc.citations) {
    if (!seen.insert(target).second) continue;  // one count per citing doc
    if (auto it = by_id_.find(target); it != by_id_.end()) {
      in_citations_[it->second] += 1;
      if (std::find(last_cited_.begin(), last_cited_.end(), it->second) ==
          last_cited_.end()) {
        last_cited_.push_back(it->second);
      }
    } else {
      pending_citations_[target] += 1;
    }
  }

  docs_.push_back(std::move(doc));
  return d;
}

void Corpus::refresh_display_name(AuthorIndex a) {
  const auto& counts = surface_counts_[a];
  // std::map iterates ascending, so the first maximum is the smallest string.
  auto best = counts.begin();
  for (auto it = counts.begin(); it != counts.end(); ++it) {
    if (it->second > best->second) best = it;
  }
  authors_[a].display_name = best->first;
}

std::optional<DocIndex> Corpus::find(std::string_view doc_id) const {
  auto it = by_id_.find(std::string(doc_id));
  if (it == by_id_.end()) return std::nullopt;
  return it->second;
}

std::optional<AuthorIndex> Corpus::find_author(std::string_view author_id) const {
  auto it = author_by_id_.find(std::string(author_id));
  if (it == author_by_id_.end()) return std::nullopt;
  return it->second;
}

uint32_t Corpus::in_citations(std::string_view doc_id) const {
  auto d = find(doc_id);
  if (!d) {
    throw Error(ErrorCode::kNotFound,
                "unknown document '" + std::string(doc_id) + "'");
  }
  return in_citations_[*d];
}

double Corpus::citation_weight(std::string_view doc_id) const {
  return citation_weight_for_count(in_citations(doc_id));
}

uint64_t Corpus::resolved_citation_edges() const {
  uint64_t total = 0;
  for (uint32_t c : in_citations_) total += c;
  return total;
}

std::map<std::string, uint32_t> Corpus::citation_table() const {
  std::map<std::string, uint32_t> out;
  for (DocIndex d = 0; d < docs_.size(); ++d) {
    out.emplace(docs_[d].id, in_citations_[d]);
  }
  return out;
}

IngestResult ingest_corpus(const std::string& path, CorpusFormat format) {
  (void)format;  // JSON lines is the only format
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot read corpus file '" + path + "'");

  IngestResult result;
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line_no == 1) strip_bom(line);
    if (is_blank(line)) continue;
    nlohmann::json rec;
    try {
      rec = nlohmann::json::parse(line);
    } catch (const nlohmann::json::parse_error&) {
      result.report.push_back({line_no, "", "invalid JSON"});
      continue;
    }
    try {
      result.corpus.add(parse_document(rec), &result.report, line_no);
    } catch (const Error& e) {
      result.report.push_back({line_no, id_of(rec), e.what()});
    }
  }
  if (in.bad()) throw Error(ErrorCode::kIo, "error reading '" + path + "'");
  return result;
}

std::vector<Document> read_documents_strict(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot read corpus file '" + path + "'");
  std::vector<Document> docs;
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line_no == 1) strip_bom(line);
    if (is_blank(line)) continue;
    try {
      docs.push_back(parse_document(std::string_view(line)));
    } catch (const Error& e) {
      throw Error(ErrorCode::kParse,
                  path + ":" + std::to_string(line_no) + ": " + e.what());
    }
  }
  return docs;
}

}  // namespace seerkit
