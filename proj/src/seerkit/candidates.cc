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

#include "seerkit/candidates.h"

#include <algorithm>
#include <deque>
#include <fstream>
#include <unordered_set>

#include "seerkit/error.h"
#include "seerkit/text.h"

namespace seerkit {
namespace {

std::string trim(std::string_view s) {
  size_t b = 0;
  size_t e = s.size();
  while (b < e && (s[b] == ' ' || s[b] == '\t' || s[b] == '\r')) ++b;
  while (e > b && (s[e - 1] == ' ' || s[e - 1] == '\t' || s[e - 1] == '\r')) --e;
  return std::string(s.substr(b, e - b));
}

// "Kernel (statistics)" -> "Kernel".
std::string strip_disambiguator(const std::string& title) {
  if (title.empty() || title.back() != ')') return title;
  const size_t open = title.rfind(" (");
  if (open == std::string::npos || open == 0) return title;
  return title.substr(0, open);
}

std::vector<std::string> json_string_list(const nlohmann::json& rec,
                                          const char* key) {
  std::vector<std::string> out;
  auto it = rec.find(key);
  if (it == rec.end() || it->is_null()) return out;
  if (!it->is_array()) {
    throw Error(ErrorCode::kParse, std::string("'") + key + "' must be an array");
  }
  for (const auto& v : *it) {
    if (!v.is_string()) {
      throw Error(ErrorCode::kParse, std::string("'") + key + "' must hold strings");
    }
    out.push_back(v.get<std::string>());
  }
  return out;
}

template <typename Fn>
void for_each_json_line(const std::string& path, Fn&& fn) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot read '" + path + "'");
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    try {
      fn(nlohmann::json::parse(line));
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorCode::kParse,
                  path + ":" + std::to_string(line_no) + ": " + e.what());
    } catch (const Error& e) {
      throw Error(ErrorCode::kParse,
                  path + ":" + std::to_string(line_no) + ": " + e.what());
    }
  }
}

}  // namespace

std::optional<Phrase> normalize_phrase(std::string_view raw) {
  Phrase tokens = text::normalize_tokens(raw);
  if (tokens.empty()) return std::nullopt;
  return tokens;
}

std::string normalize_phrase_key(std::string_view raw) {
  auto p = normalize_phrase(raw);
  return p ? text::join(*p) : std::string();
}

std::string category_key(std::string_view name) {
  std::string out;
  bool pending_space = false;
  for (char c : name) {
    if (c == '_' || c == ' ' || c == '\t') {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) {
      out.push_back(' ');
      pending_space = false;
    }
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
    out.push_back(c);
  }
  return out;
}

CategoryGraph::CategoryGraph(std::span<const WikiPage> pages,
                             std::span<const CategoryEdge> edges) {
  for (const auto& e : edges) {
    std::string p = category_key(e.parent);
    std::string c = category_key(e.child);
    categories_.insert(p);
    categories_.insert(c);
    children_[p].push_back(std::move(c));
  }
  for (size_t i = 0; i < pages.size(); ++i) {
    for (const auto& cat : pages[i].categories) {
      std::string key = category_key(cat);
      categories_.insert(key);
      members_[key].push_back(i);
    }
  }
}

bool CategoryGraph::has_category(std::string_view name) const {
  return categories_.count(category_key(name)) > 0;
}

std::unordered_map<std::string, int> CategoryGraph::depths_from(
    std::string_view root, int max_depth) const {
  std::unordered_map<std::string, int> depth;
  const std::string start = category_key(root);
  if (!categories_.count(start) || max_depth < 0) return depth;
  std::deque<std::string> queue{start};
  depth.emplace(start, 0);
  while (!queue.empty()) {
    const std::string cur = std::move(queue.front());
    queue.pop_front();
    const int d = depth.at(cur);
    if (d == max_depth) continue;
    auto it = children_.find(cur);
    if (it == children_.end()) continue;
    for (const auto& child : it->second) {
      if (depth.emplace(child, d + 1).second) queue.push_back(child);
    }
  }
  return depth;
}

const std::vector<size_t>& CategoryGraph::members(const std::string& key) const {
  static const std::vector<size_t> kNone;
  auto it = members_.find(key);
  return it == members_.end() ? kNone : it->second;
}

std::vector<RootSpec> default_roots() {
  return {{"computer science", 3}, {"statistics", 2}, {"mathematics", 2}};
}

std::vector<RootSpec> parse_roots(std::string_view spec) {
  std::vector<RootSpec> roots;
  for (const std::string& item : text::split(spec, ',')) {
    const std::string entry = trim(item);
    if (entry.empty()) continue;
    const size_t colon = entry.rfind(':');
    if (colon == std::string::npos || colon == 0 || colon + 1 == entry.size()) {
      throw Error(ErrorCode::kConfig,
                  "root '" + entry + "' must look like <category>:<depth>");
    }
    const std::string depth_str = trim(entry.substr(colon + 1));
    int depth = 0;
    try {
      size_t used = 0;
      depth = std::stoi(depth_str, &used);
      if (used != depth_str.size()) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw Error(ErrorCode::kConfig, "root '" + entry + "' has a bad depth");
    }
    if (depth < 0) {
      throw Error(ErrorCode::kConfig, "root '" + entry + "' has a negative depth");
    }
    roots.push_back({trim(entry.substr(0, colon)), depth});
  }
  return roots;
}

HarvestResult harvest_wiki(std::span<const WikiPage> pages,
                           const CategoryGraph& graph,
                           std::span<const RootSpec> roots) {
  HarvestResult result;
  if (pages.empty()) result.warnings.push_back("empty wiki dump");

  std::vector<bool> in_bound(pages.size(), false);
  for (const RootSpec& root : roots) {
    if (!graph.has_category(root.category)) {
      result.warnings.push_back("root category '" + root.category +
                                "' not found in dump");
      continue;
    }
    for (const auto& [cat, depth] : graph.depths_from(root.category, root.max_depth)) {
      (void)depth;
      for (size_t page : graph.members(cat)) in_bound[page] = true;
    }
  }

  auto add = [&](const std::string& raw, const std::string& what) {
    auto p = normalize_phrase(raw);
    if (!p) return;
    if (p->size() > kMaxPhraseTokens) {
      result.warnings.push_back(what + " '" + raw + "' exceeds " +
                                std::to_string(kMaxPhraseTokens) +
                                " tokens; dropped");
      return;
    }
    result.phrases.insert(text::join(*p));
  };

  for (size_t i = 0; i < pages.size(); ++i) {
    if (!in_bound[i]) continue;
    add(strip_disambiguator(pages[i].title), "title");
    for (const auto& link : pages[i].intro_link_texts) add(link, "link text");
  }
  return result;
}

std::vector<WikiPage> read_wiki_dump(const std::string& path) {
  std::vector<WikiPage> pages;
  for_each_json_line(path, [&](const nlohmann::json& rec) {
    if (!rec.is_object()) throw Error(ErrorCode::kParse, "record is not an object");
    auto title = rec.find("title");
    if (title == rec.end() || !title->is_string() ||
        title->get<std::string>().empty()) {
      throw Error(ErrorCode::kParse, "missing or empty 'title'");
    }
    pages.push_back({title->get<std::string>(), json_string_list(rec, "categories"),
                     json_string_list(rec, "intro_link_texts")});
  });
  return pages;
}

std::vector<CategoryEdge> read_category_edges(const std::string& path) {
  std::vector<CategoryEdge> edges;
  for_each_json_line(path, [&](const nlohmann::json& rec) {
    if (!rec.is_object() || !rec.contains("parent") || !rec.contains("child") ||
        !rec["parent"].is_string() || !rec["child"].is_string()) {
      throw Error(ErrorCode::kParse, "edge needs string 'parent' and 'child'");
    }
    edges.push_back({rec["parent"].get<std::string>(), rec["child"].get<std::string>()});
  });
  return edges;
}

std::set<std::string> mine_title_ngrams(const Corpus& corpus, int min_count) {
  if (min_count < 1) {
    throw Error(ErrorCode::kInvalidArgument, "min_count must be at least 1");
  }
  std::unordered_map<std::string, int> counts;
  for (const Document& doc : corpus.docs()) {
    for (const text::Segment& seg : text::normalize_segments(doc.title)) {
      for (size_t n = 2; n <= 4; ++n) {
        for (size_t i = 0; i + n <= seg.size(); ++i) {
          std::string gram = seg[i];
          for (size_t k = 1; k < n; ++k) {
            gram.push_back(' ');
            gram += seg[i + k];
          }
          counts[gram] += 1;
        }
      }
    }
  }
  std::set<std::string> out;
  for (const auto& [gram, c] : counts) {
    if (c >= min_count) out.insert(gram);
  }
  return out;
}

const char* provenance_name(Provenance p) {
  switch (p) {
    case Provenance::kWiki: return "wiki";
    case Provenance::kNgram: return "ngram";
    case Provenance::kBoth: return "both";
  }
  return "wiki";
}

CandidateLexicon CandidateLexicon::build(const std::set<std::string>& wiki_phrases,
                                         const std::set<std::string>& ngram_phrases) {
  std::map<std::string, uint8_t> merged;
  for (const auto& p : wiki_phrases) {
    if (!p.empty()) merged[p] |= static_cast<uint8_t>(Provenance::kWiki);
  }
  for (const auto& p : ngram_phrases) {
    if (!p.empty()) merged[p] |= static_cast<uint8_t>(Provenance::kNgram);
  }
  CandidateLexicon lex;
  for (const auto& [p, tag] : merged) {
    lex.phrases_.push_back(p);
    lex.provenance_.push_back(static_cast<Provenance>(tag));
  }
  lex.index();
  return lex;
}

void CandidateLexicon::index() {
  tokens_.clear();
  ids_.clear();
  tokens_.reserve(phrases_.size());
  for (PhraseId id = 0; id < phrases_.size(); ++id) {
    tokens_.push_back(text::split(phrases_[id]));
    ids_.emplace(phrases_[id], id);
  }
}

std::optional<PhraseId> CandidateLexicon::find(std::string_view joined) const {
  auto it = ids_.find(std::string(joined));
  if (it == ids_.end()) return std::nullopt;
  return it->second;
}

void CandidateLexicon::save(const std::string& txt_path,
                            const std::string& provenance_path) const {
  std::ofstream txt(txt_path, std::ios::binary | std::ios::trunc);
  std::ofstream prov(provenance_path, std::ios::binary | std::ios::trunc);
  if (!txt || !prov) {
    throw Error(ErrorCode::kIo, "cannot write lexicon to '" + txt_path + "'");
  }
  for (PhraseId id = 0; id < phrases_.size(); ++id) {
    txt << phrases_[id] << '\n';
    prov << provenance_name(provenance_[id]) << '\n';
  }
  if (!txt || !prov) throw Error(ErrorCode::kIo, "error writing lexicon");
}

CandidateLexicon CandidateLexicon::load(const std::string& txt_path,
                                        const std::string& provenance_path,
                                        std::vector<std::string>* warnings) {
  std::ifstream txt(txt_path, std::ios::binary);
  if (!txt) throw Error(ErrorCode::kIo, "cannot read lexicon '" + txt_path + "'");
  std::vector<std::string> lines;
  for (std::string line; std::getline(txt, line);) lines.push_back(std::move(line));

  std::vector<std::string> tags;
  if (!provenance_path.empty()) {
    std::ifstream prov(provenance_path, std::ios::binary);
    if (prov) {
      for (std::string line; std::getline(prov, line);) tags.push_back(trim(line));
      if (tags.size() != lines.size()) {
        throw Error(ErrorCode::kConfig, "provenance sidecar '" + provenance_path +
                                            "' does not match the lexicon");
      }
    }
  }

  std::map<std::string, uint8_t> merged;
  for (size_t i = 0; i < lines.size(); ++i) {
    auto p = normalize_phrase(lines[i]);
    if (!p) continue;
    if (p->size() > kMaxPhraseTokens) {
      if (warnings) {
        warnings->push_back("lexicon phrase '" + trim(lines[i]) + "' exceeds " +
                            std::to_string(kMaxPhraseTokens) + " tokens; dropped");
      }
      continue;
    }
    uint8_t tag = static_cast<uint8_t>(Provenance::kWiki);
    if (!tags.empty()) {
      if (tags[i] == "ngram") tag = static_cast<uint8_t>(Provenance::kNgram);
      else if (tags[i] == "both") tag = static_cast<uint8_t>(Provenance::kBoth);
      else if (tags[i] != "wiki") {
        throw Error(ErrorCode::kConfig, "unknown provenance tag '" + tags[i] + "'");
      }
    }
    merged[text::join(*p)] |= tag;
  }
  CandidateLexicon lex;
  for (const auto& [p, tag] : merged) {
    lex.phrases_.push_back(p);
    lex.provenance_.push_back(static_cast<Provenance>(tag));
  }
  lex.index();
  return lex;
}

}  // namespace seerkit
