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

#include "seerkit/engine.h"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <random>

#include "seerkit/error.h"

namespace seerkit {
namespace fs = std::filesystem;
namespace {

constexpr char kIndexMagic[8] = {'S', 'E', 'E', 'R', 'I', 'D', 'X', '1'};

class BinaryWriter {
 public:
  explicit BinaryWriter(std::ostream& out) : out_(out) {}
  void u32(uint32_t v) {
    char b[4];
    for (int i = 0; i < 4; ++i) b[i] = static_cast<char>((v >> (8 * i)) & 0xff);
    out_.write(b, 4);
  }
  void u64(uint64_t v) {
    char b[8];
    for (int i = 0; i < 8; ++i) b[i] = static_cast<char>((v >> (8 * i)) & 0xff);
    out_.write(b, 8);
  }
  void str(const std::string& s) {
    u32(static_cast<uint32_t>(s.size()));
    out_.write(s.data(), static_cast<std::streamsize>(s.size()));
  }

 private:
  std::ostream& out_;
};

class BinaryReader {
 public:
  BinaryReader(std::istream& in, std::string path) : in_(in), path_(std::move(path)) {}
  uint32_t u32() {
    unsigned char b[4];
    read(b, 4);
    uint32_t v = 0;
    for (int i = 0; i < 4; ++i) v |= static_cast<uint32_t>(b[i]) << (8 * i);
    return v;
  }
  uint64_t u64() {
    unsigned char b[8];
    read(b, 8);
    uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v |= static_cast<uint64_t>(b[i]) << (8 * i);
    return v;
  }
  std::string str() {
    const uint32_t n = u32();
    std::string s(n, '\0');
    read(s.data(), n);
    return s;
  }
  void read(void* dst, size_t n) {
    in_.read(static_cast<char*>(dst), static_cast<std::streamsize>(n));
    if (static_cast<size_t>(in_.gcount()) != n) {
      throw Error(ErrorCode::kConfig, path_ + ": truncated index file");
    }
  }

 private:
  std::istream& in_;
  std::string path_;
};

void write_index_bin(const Index& index, const fs::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kIo, "cannot write " + path.string());
  BinaryWriter w(out);
  out.write(kIndexMagic, sizeof kIndexMagic);
  const CorpusStats& stats = index.stats();
  w.u32(kEngineFormatVersion);
  w.u64(stats.doc_count());
  w.u64(stats.lexicon_size());
  w.u64(stats.vocabulary_size());
  for (WordId v = 0; v < stats.vocabulary_size(); ++v) w.str(stats.word(v));
  for (DocIndex d = 0; d < stats.doc_count(); ++d) {
    const DocTerms& t = stats.doc(d);
    w.u32(t.length);
    w.u32(t.word_total);
    w.u32(static_cast<uint32_t>(t.phrases.size()));
    for (const auto& [q, c] : t.phrases) {
      w.u32(q);
      w.u32(c);
    }
    w.u32(static_cast<uint32_t>(t.words.size()));
    for (const auto& [v, c] : t.words) {
      w.u32(v);
      w.u32(c);
    }
  }
  out.flush();
  if (!out) throw Error(ErrorCode::kIo, "cannot write " + path.string());
}

std::vector<Index::StoredDoc> read_index_bin(const fs::path& path, size_t documents,
                                             size_t lexicon_size) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot read " + path.string());
  BinaryReader r(in, path.string());
  char magic[sizeof kIndexMagic];
  r.read(magic, sizeof magic);
  if (!std::equal(magic, magic + sizeof magic, kIndexMagic)) {
    throw Error(ErrorCode::kConfig, path.string() + ": not an index file");
  }
  if (r.u32() != kEngineFormatVersion) {
    throw Error(ErrorCode::kConfig, path.string() + ": unsupported index version");
  }
  const uint64_t n_docs = r.u64();
  const uint64_t n_phrases = r.u64();
  if (n_docs != documents || n_phrases != lexicon_size) {
    throw Error(ErrorCode::kConfig,
                path.string() + ": index does not match corpus and lexicon");
  }
  const uint64_t n_words = r.u64();
  std::vector<std::string> vocab;
  vocab.reserve(n_words);
  for (uint64_t i = 0; i < n_words; ++i) vocab.push_back(r.str());
  std::vector<Index::StoredDoc> docs(n_docs);
  for (auto& sd : docs) {
    sd.length = r.u32();
    sd.word_total = r.u32();
    const uint32_t np = r.u32();
    for (uint32_t i = 0; i < np; ++i) {
      const uint32_t q = r.u32();
      const uint32_t c = r.u32();
      sd.phrases.emplace_back(q, c);
    }
    const uint32_t nw = r.u32();
    for (uint32_t i = 0; i < nw; ++i) {
      const uint32_t v = r.u32();
      const uint32_t c = r.u32();
      if (v >= vocab.size()) {
        throw Error(ErrorCode::kConfig, path.string() + ": corrupt word id");
      }
      sd.words.emplace_back(vocab[v], c);
    }
  }
  return docs;
}

nlohmann::json read_json_file(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot read " + path.string());
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kConfig, path.string() + ": " + e.what());
  }
}

bool non_empty_dir(const fs::path& p) {
  std::error_code ec;
  if (!fs::exists(p, ec)) return false;
  if (!fs::is_directory(p, ec)) return true;
  return fs::directory_iterator(p, ec) != fs::directory_iterator();
}

std::string unique_suffix() {
  std::random_device rd;
  return std::to_string(rd()) + "-" +
         std::to_string(std::chrono::steady_clock::now().time_since_epoch().count());
}

}  // namespace

nlohmann::json to_json(const BuildReport& r) {
  return {{"documents", r.documents},
          {"authors", r.authors},
          {"lexicon_size", r.lexicon_size},
          {"wiki_phrases", r.wiki_phrases},
          {"ngram_phrases", r.ngram_phrases},
          {"phrases_in_corpus", r.phrases_in_corpus},
          {"phrase_occurrences", r.phrase_occurrences},
          {"total_length", r.total_length},
          {"citation_edges", r.citation_edges},
          {"ingest_issues", to_json(r.ingest)},
          {"warnings", r.warnings}};
}

std::shared_ptr<Index> build_index(const BuildOptions& opts, BuildReport* report) {
  opts.index.lm.validate();
  opts.index.oov.validate();
  BuildReport rep;
  IngestResult ingest = ingest_corpus(opts.corpus_path);
  rep.ingest = std::move(ingest.report);
  if (ingest.corpus.empty()) rep.warnings.push_back("corpus is empty; queries will fail");

  std::shared_ptr<const CandidateLexicon> lexicon;
  if (!opts.lexicon_path.empty()) {
    const std::string prov = fs::path(opts.lexicon_path).replace_extension(".provenance");
    lexicon = std::make_shared<CandidateLexicon>(CandidateLexicon::load(
        opts.lexicon_path, fs::exists(prov) ? prov : std::string(), &rep.warnings));
  } else {
    std::set<std::string> wiki;
    if (!opts.wiki_dump_path.empty()) {
      const auto pages = read_wiki_dump(opts.wiki_dump_path);
      std::vector<CategoryEdge> edges;
      if (!opts.category_edges_path.empty()) {
        edges = read_category_edges(opts.category_edges_path);
      }
      CategoryGraph graph(pages, edges);
      HarvestResult h = harvest_wiki(pages, graph, opts.roots);
      wiki = std::move(h.phrases);
      for (auto& w : h.warnings) rep.warnings.push_back(std::move(w));
    } else {
      rep.warnings.push_back("no encyclopedia dump given; lexicon holds title n-grams only");
    }
    const auto ngrams = mine_title_ngrams(ingest.corpus, opts.min_ngram_count);
    rep.wiki_phrases = wiki.size();
    rep.ngram_phrases = ngrams.size();
    lexicon = std::make_shared<CandidateLexicon>(CandidateLexicon::build(wiki, ngrams));
  }
  if (lexicon->empty()) rep.warnings.push_back("candidate lexicon is empty");

  auto index = Index::build(std::move(ingest.corpus), lexicon, opts.index, opts.threads);
  const CorpusStats& stats = index->stats();
  rep.documents = index->corpus().size();
  rep.authors = index->corpus().author_count();
  rep.lexicon_size = lexicon->size();
  for (PhraseId q = 0; q < lexicon->size(); ++q) {
    if (stats.phrase_cf(q) > 0) ++rep.phrases_in_corpus;
    rep.phrase_occurrences += stats.phrase_cf(q);
  }
  rep.total_length = stats.total_length();
  rep.citation_edges = index->corpus().resolved_citation_edges();
  if (report) *report = std::move(rep);
  return index;
}

void save_index(const Index& index, const std::string& dir, bool force) {
  const fs::path target(dir);
  if (non_empty_dir(target) && !force) {
    throw Error(ErrorCode::kAlreadyExists,
                dir + " already exists; pass --force to overwrite");
  }
  std::error_code ec;
  const fs::path parent =
      target.has_parent_path() ? target.parent_path() : fs::path(".");
  fs::create_directories(parent, ec);
  const fs::path staging =
      parent / ("." + target.filename().string() + ".tmp-" + unique_suffix());
  if (!fs::create_directory(staging, ec)) {
    throw Error(ErrorCode::kIo, "cannot create " + staging.string());
  }
  try {
    {
      std::ofstream out(staging / "corpus.jsonl");
      if (!out) throw Error(ErrorCode::kIo, "cannot write corpus.jsonl");
      for (const Document& doc : index.corpus().docs()) {
        out << document_to_json(doc).dump() << '\n';
      }
      if (!out) throw Error(ErrorCode::kIo, "cannot write corpus.jsonl");
    }
    index.lexicon().save((staging / "lexicon.txt").string(),
                         (staging / "lexicon.provenance").string());
    write_index_bin(index, staging / "index.bin");
    nlohmann::json manifest = {
        {"format", "seerkit-engine"},
        {"version", kEngineFormatVersion},
        {"mu", index.config().lm.mu},
        {"top_n", index.config().oov.top_n},
        {"documents", index.corpus().size()},
        {"authors", index.corpus().author_count()},
        {"lexicon_size", index.lexicon().size()},
        {"total_length", index.stats().total_length()}};
    {
      std::ofstream out(staging / "manifest.json");
      out << manifest.dump(2) << '\n';
      if (!out) throw Error(ErrorCode::kIo, "cannot write manifest.json");
    }
    fs::path retired;
    if (fs::exists(target)) {
      retired = parent / ("." + target.filename().string() + ".old-" + unique_suffix());
      fs::rename(target, retired);
    }
    fs::rename(staging, target);
    if (!retired.empty()) fs::remove_all(retired, ec);
  } catch (const fs::filesystem_error& e) {
    fs::remove_all(staging, ec);
    throw Error(ErrorCode::kIo, e.what());
  } catch (...) {
    fs::remove_all(staging, ec);
    throw;
  }
}

std::shared_ptr<Index> load_index(const std::string& dir) {
  const fs::path root(dir);
  if (!fs::is_directory(root)) throw Error(ErrorCode::kIo, dir + ": no such engine directory");
  const nlohmann::json manifest = read_json_file(root / "manifest.json");
  if (!manifest.is_object() || manifest.value("format", "") != "seerkit-engine") {
    throw Error(ErrorCode::kConfig, dir + ": not an engine directory");
  }
  if (manifest.value("version", 0) != kEngineFormatVersion) {
    throw Error(ErrorCode::kConfig,
                dir + ": engine format version " + manifest["version"].dump() +
                    " is not supported (expected " +
                    std::to_string(kEngineFormatVersion) + ")");
  }
  IndexConfig cfg;
  try {
    cfg.lm.mu = manifest.at("mu").get<double>();
    cfg.oov.top_n = manifest.at("top_n").get<size_t>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kConfig, dir + ": bad manifest: " + e.what());
  }
  IngestResult ingest = ingest_corpus((root / "corpus.jsonl").string());
  if (ingest.corpus.size() != manifest.value("documents", size_t{0})) {
    throw Error(ErrorCode::kConfig, dir + ": corpus snapshot does not match the manifest");
  }
  auto lexicon = std::make_shared<CandidateLexicon>(CandidateLexicon::load(
      (root / "lexicon.txt").string(), (root / "lexicon.provenance").string()));
  auto terms = read_index_bin(root / "index.bin", ingest.corpus.size(), lexicon->size());
  return Index::assemble(std::move(ingest.corpus), lexicon, cfg, std::move(terms));
}

Engine::Engine(std::shared_ptr<const Index> index) : index_(std::move(index)) {}

std::unique_ptr<Engine> Engine::build(const BuildOptions& opts, BuildReport* report) {
  return std::make_unique<Engine>(build_index(opts, report));
}

std::unique_ptr<Engine> Engine::open(const std::string& dir) {
  return std::make_unique<Engine>(load_index(dir));
}

void Engine::save(const std::string& dir, bool force) const {
  save_index(*snapshot(), dir, force);
}

std::shared_ptr<const Index> Engine::snapshot() const {
  std::lock_guard lock(snapshot_mu_);
  return index_;
}

UpdateSummary Engine::add_documents(std::vector<Document> documents) {
  std::lock_guard update_lock(update_mu_);
  auto base = snapshot();
  UpdateBatch batch = prepare_update(*base, std::move(documents));
  UpdateSummary summary;
  std::shared_ptr<const Index> next = apply_update(*base, batch, &summary);
  {
    std::lock_guard lock(snapshot_mu_);
    index_ = std::move(next);
  }
  return summary;
}

}  // namespace seerkit
