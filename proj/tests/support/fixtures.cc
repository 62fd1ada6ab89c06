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

#include "support/fixtures.h"

#include <fstream>
#include <stdexcept>

#include <stdlib.h>

#include "seerkit/text.h"

namespace seerkit::testing {
namespace fs = std::filesystem;

TempDir::TempDir() {
  std::string tmpl = (fs::temp_directory_path() / "seerkit-test-XXXXXX").string();
  if (!mkdtemp(tmpl.data())) throw std::runtime_error("mkdtemp failed");
  path_ = tmpl;
}

TempDir::~TempDir() {
  std::error_code ec;
  fs::remove_all(path_, ec);
}

std::string data_path(const std::string& name) {
  return (fs::path(SEERKIT_TEST_DATA_DIR) / name).string();
}

void write_text(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  out << content;
  if (!out) throw std::runtime_error("cannot write " + path);
}

void write_jsonl(const std::string& path, const std::vector<Document>& docs) {
  std::string content;
  for (const Document& d : docs) content += document_to_json(d).dump() + "\n";
  write_text(path, content);
}

const std::vector<std::string>& stable_words() {
  static const std::vector<std::string> words = [] {
    const char* pool[] = {
        "graph",  "data",   "model",  "network", "learn",  "search", "robot",
        "kernel", "tree",   "web",    "text",    "cloud",  "sensor", "signal",
        "speech", "vision", "logic",  "proof",   "game",   "market", "stream",
        "cache",  "memori", "grid",   "trust",   "privaci", "spam",  "wiki",
        "lab",    "map",    "path",   "token",   "vector", "matrix", "sort",
        "hash",   "chip",   "bit",    "sound",   "music",  "film",   "art",
        "protein", "gene",  "cell",   "drug",    "crop",   "soil",   "storm"};
    std::vector<std::string> out;
    for (const char* w : pool) {
      if (text::stem_token(w) == w && text::normalize_tokens(w).size() == 1) {
        out.emplace_back(w);
      }
    }
    return out;
  }();
  return words;
}

namespace {

const std::vector<std::vector<std::string>>& author_pool() {
  static const std::vector<std::vector<std::string>> pool = {
      {"Alice Moreau", "A. Moreau"},
      {"Bob Tanaka", "Bob K. Tanaka"},
      {"Chen Li", "C. Li"},
      {"Dana Smith"},
      {"Erin O'Neil", "E. O'Neil"},
      {"Fran\xC3\xA7ois Dupont", "Francois Dupont"},
      {"Gita Rao"},
      {"Hugo Weber", "H. Weber"},
      {"Ivan Petrov"},
      {"Jun Ito", "J. Ito"},
      {"Kim Park"},
      {"Lena Sousa"},
  };
  return pool;
}

template <typename T>
const T& pick(std::mt19937_64& rng, const std::vector<T>& v) {
  return v[std::uniform_int_distribution<size_t>(0, v.size() - 1)(rng)];
}

size_t uniform(std::mt19937_64& rng, size_t lo, size_t hi) {
  return std::uniform_int_distribution<size_t>(lo, hi)(rng);
}

}  // namespace

Fixture make_fixture(uint64_t seed, const FixtureParams& params) {
  std::mt19937_64 rng(seed);
  const auto& words = stable_words();
  Fixture f;

  const size_t n_phrases = uniform(rng, std::min<size_t>(5, params.max_phrases),
                                   params.max_phrases);
  std::vector<std::string> phrases;
  for (size_t tries = 0; phrases.size() < n_phrases && tries < 1000; ++tries) {
    const size_t len = uniform(rng, 1, 3);
    std::vector<std::string> toks;
    for (size_t i = 0; i < len; ++i) toks.push_back(pick(rng, words));
    std::string p = text::join(toks);
    if (f.phrases.insert(p).second) phrases.push_back(p);
  }

  std::vector<size_t> author_slots(author_pool().size());
  for (size_t i = 0; i < author_slots.size(); ++i) author_slots[i] = i;
  std::shuffle(author_slots.begin(), author_slots.end(), rng);
  author_slots.resize(std::min(params.max_authors, author_slots.size()));
  author_slots.resize(uniform(rng, std::min<size_t>(2, author_slots.size()),
                              author_slots.size()));

  auto emit_items = [&](size_t lo, size_t hi, const char* seps) {
    std::string out;
    const size_t n = uniform(rng, lo, hi);
    for (size_t i = 0; i < n; ++i) {
      if (!out.empty()) {
        const size_t r = uniform(rng, 0, 9);
        out += r == 0 ? std::string(1, seps[0]) + " " : r == 1 ? std::string(1, seps[1]) + " " : " ";
      }
      if (!phrases.empty() && uniform(rng, 0, 2) == 0) {
        out += pick(rng, phrases);
      } else {
        out += pick(rng, words);
      }
    }
    return out;
  };

  const size_t n_docs = uniform(rng, std::min<size_t>(8, params.max_docs), params.max_docs);
  for (size_t i = 0; i < n_docs; ++i) {
    Document d;
    d.id = "doc-" + std::to_string(i);
    if (uniform(rng, 0, 24) != 0) {
      d.title = emit_items(2, 6, ":,");
      d.abstract = emit_items(5, 30, ".;");
    }
    const size_t n_auth = uniform(rng, 1, 3);
    for (size_t a = 0; a < n_auth; ++a) {
      d.authors.push_back(pick(rng, author_pool()[pick(rng, author_slots)]));
    }
    if (uniform(rng, 0, 3) != 0) d.year = static_cast<int>(1990 + uniform(rng, 0, 30));
    const size_t n_cit = uniform(rng, 0, 4);
    for (size_t c = 0; c < n_cit; ++c) {
      d.citations.push_back("doc-" + std::to_string(uniform(rng, 0, n_docs + 2)));
    }
    f.docs.push_back(std::move(d));
  }
  for (size_t i = 0; i < 4; ++i) f.probe_words.push_back(pick(rng, words));
  return f;
}

std::vector<Document> gs_star_documents() {
  auto make = [](std::string id, std::string title, std::string abstract,
                 std::string author, std::vector<std::string> cites) {
    Document d;
    d.id = std::move(id);
    d.title = std::move(title);
    d.abstract = std::move(abstract);
    d.authors = {std::move(author)};
    d.citations = std::move(cites);
    return d;
  };
  return {
      make("a1", "protein gene cell",
           "drug crop soil storm protein gene cell drug crop soil storm protein gene cell "
           "drug crop soil",
           "Famous Fay", {}),
      make("a2", "graph mining protein drug", "", "Famous Fay", {"a1"}),
      make("b1", "graph mining", "graph mining; graph mining", "Ona Topic", {"a1"}),
      make("c", "web", "", "Xavier Cite", {"a1", "b1"}),
  };
}

Corpus corpus_of(const std::vector<Document>& docs) {
  Corpus c;
  for (const Document& d : docs) c.add(d);
  return c;
}

std::shared_ptr<const CandidateLexicon> lexicon_of(const std::set<std::string>& phrases) {
  return std::make_shared<CandidateLexicon>(CandidateLexicon::build(phrases, {}));
}

std::shared_ptr<Index> index_of(const Fixture& f, double mu, size_t top_n) {
  IndexConfig cfg;
  cfg.lm.mu = mu;
  cfg.oov.top_n = top_n;
  return Index::build(corpus_of(f.docs), lexicon_of(f.phrases), cfg);
}

}  // namespace seerkit::testing
