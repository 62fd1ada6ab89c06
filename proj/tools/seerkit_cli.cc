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

// seerkit command line. Standard output carries JSON only; diagnostics go
// to standard error. Exit status: 0 ok, 1 I/O, config or usage problems,
// 2 domain errors (unknown author, out-of-lexicon related query, ...).

#include <csignal>
#include <cstdio>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include <pthread.h>

#include <CLI11.hpp>

#include "seerkit/seerkit.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitDomain = 2;

int exit_code(seer_status s) {
  switch (s) {
    case SEER_OK:
      return kExitOk;
    case SEER_ERR_INVALID_ARGUMENT:
    case SEER_ERR_NOT_FOUND:
    case SEER_ERR_NOT_IN_LEXICON:
    case SEER_ERR_DUPLICATE:
    case SEER_ERR_EMPTY_MODEL:
    case SEER_ERR_UNUSABLE_NAME:
      return kExitDomain;
    default:
      return kExitInput;
  }
}

int fail(seer_status s) {
  std::cerr << "seerkit: " << seer_status_name(s) << ": " << seer_last_error() << "\n";
  return exit_code(s);
}

// Prints and releases a JSON string returned by the library.
void print(char* json) {
  std::fwrite(json, 1, std::char_traits<char>::length(json), stdout);
  std::fputc('\n', stdout);
  std::fflush(stdout);
  seer_free(json);
}

class EngineHandle {
 public:
  ~EngineHandle() { seer_engine_close(engine_); }
  seer_status open(const std::string& dir) { return seer_engine_open(dir.c_str(), &engine_); }
  seer_engine* get() const { return engine_; }

 private:
  seer_engine* engine_ = nullptr;
};

using QueryFn = seer_status (*)(seer_engine*, const char*, size_t, char**);

int run_query(const std::string& dir, const std::string& text, size_t k, QueryFn fn) {
  EngineHandle engine;
  if (seer_status s = engine.open(dir); s != SEER_OK) return fail(s);
  char* out = nullptr;
  if (seer_status s = fn(engine.get(), text.c_str(), k, &out); s != SEER_OK) return fail(s);
  print(out);
  return kExitOk;
}

const char* c_or_null(const std::string& s) { return s.empty() ? nullptr : s.c_str(); }

void add_engine_option(CLI::App* cmd, std::string& engine) {
  cmd->add_option("--engine", engine, "Engine directory")
      ->envname("SEERKIT_ENGINE")
      ->required();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"seerkit: expert, expertise and related-phrase search"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(seer_version()));

  int code = kExitOk;

  // build
  seer_build_options build_opts;
  seer_build_options_init(&build_opts);
  std::string corpus, wiki, edges, roots, lexicon, out_dir;
  bool force = false;
  auto* build = app.add_subcommand("build", "Build an engine directory from a corpus");
  build->add_option("--corpus", corpus, "Corpus, JSON lines")->required();
  build->add_option("--wiki-dump", wiki, "Encyclopedia pages, JSON lines");
  build->add_option("--category-edges", edges, "Category edges, JSON lines");
  build->add_option("--roots", roots, "Root categories, name:depth,...");
  build->add_option("--lexicon", lexicon, "Use this phrase list instead of harvesting");
  build->add_option("--out", out_dir, "Engine directory to create")->required();
  build->add_option("--mu", build_opts.mu, "Dirichlet smoothing factor")
      ->check(CLI::PositiveNumber);
  build->add_option("--top-n", build_opts.top_n, "Fallback document pool size")
      ->check(CLI::PositiveNumber);
  build->add_option("--min-ngram-count", build_opts.min_ngram_count,
                    "Minimum title n-gram frequency")
      ->check(CLI::PositiveNumber);
  build->add_option("--threads", build_opts.threads, "Extraction threads, 0 = all cores");
  build->add_flag("--force", force, "Replace an existing engine directory");
  build->callback([&] {
    build_opts.corpus_path = corpus.c_str();
    build_opts.wiki_dump_path = c_or_null(wiki);
    build_opts.category_edges_path = c_or_null(edges);
    build_opts.roots = c_or_null(roots);
    build_opts.lexicon_path = c_or_null(lexicon);
    seer_engine* engine = nullptr;
    char* report = nullptr;
    if (seer_status s = seer_build(&build_opts, &engine, &report); s != SEER_OK) {
      code = fail(s);
      return;
    }
    seer_status s = seer_engine_save(engine, out_dir.c_str(), force ? 1 : 0);
    seer_engine_close(engine);
    if (s != SEER_OK) {
      seer_free(report);
      code = fail(s);
      return;
    }
    print(report);
  });

  // queries
  std::string engine_dir, query, author;
  size_t k = 10;
  auto add_k = [&](CLI::App* cmd) {
    cmd->add_option("-k", k, "Number of results")->check(CLI::PositiveNumber);
  };

  auto* experts = app.add_subcommand("experts", "Rank experts for a query");
  add_engine_option(experts, engine_dir);
  experts->add_option("-q,--query", query, "Query text")->required();
  add_k(experts);
  experts->callback([&] { code = run_query(engine_dir, query, k, seer_experts); });

  auto* expertise = app.add_subcommand("expertise", "Rank an author's expertise phrases");
  add_engine_option(expertise, engine_dir);
  expertise->add_option("-a,--author", author, "Author name")->required();
  add_k(expertise);
  expertise->callback([&] { code = run_query(engine_dir, author, k, seer_expertise); });

  auto* related = app.add_subcommand("related", "Rank phrases related to a lexicon phrase");
  add_engine_option(related, engine_dir);
  related->add_option("-q,--query", query, "Lexicon phrase")->required();
  add_k(related);
  related->callback([&] { code = run_query(engine_dir, query, k, seer_related); });

  auto* gs = app.add_subcommand("gs-star", "Citation-count baseline ranking for a query");
  add_engine_option(gs, engine_dir);
  gs->add_option("-q,--query", query, "Query text")->required();
  add_k(gs);
  gs->callback([&] { code = run_query(engine_dir, query, k, seer_gs_star); });

  // add
  std::string add_corpus;
  auto* add = app.add_subcommand("add", "Add documents to an engine, all or nothing");
  add_engine_option(add, engine_dir);
  add->add_option("--corpus", add_corpus, "New documents, JSON lines")->required();
  add->callback([&] {
    EngineHandle engine;
    if (seer_status s = engine.open(engine_dir); s != SEER_OK) {
      code = fail(s);
      return;
    }
    char* summary = nullptr;
    if (seer_status s = seer_add_corpus_file(engine.get(), add_corpus.c_str(), &summary);
        s != SEER_OK) {
      code = fail(s);
      return;
    }
    if (seer_status s = seer_engine_save(engine.get(), engine_dir.c_str(), 1); s != SEER_OK) {
      seer_free(summary);
      code = fail(s);
      return;
    }
    print(summary);
  });

  // eval
  std::vector<std::string> runs;
  std::string truth;
  std::vector<int> eval_ns, eval_ks;
  bool verbatim = false;
  auto* eval = app.add_subcommand("eval", "Consensus and precision over run files");
  eval->add_option("--runs", runs, "Run files")->required()->expected(1, -1);
  eval->add_option("--truth", truth, "Ground-truth file");
  eval->add_option("-n", eval_ns, "Consensus depths")->check(CLI::PositiveNumber);
  eval->add_option("-k", eval_ks, "Precision depths")->check(CLI::PositiveNumber);
  eval->add_flag("--verbatim-names", verbatim,
                 "Compare names as given instead of normalizing them");
  eval->callback([&] {
    std::vector<const char*> paths;
    for (const auto& r : runs) paths.push_back(r.c_str());
    char* out = nullptr;
    seer_status s = seer_eval(paths.data(), paths.size(), c_or_null(truth),
                              eval_ns.empty() ? nullptr : eval_ns.data(), eval_ns.size(),
                              eval_ks.empty() ? nullptr : eval_ks.data(), eval_ks.size(),
                              verbatim ? 1 : 0, &out);
    if (s != SEER_OK) {
      code = fail(s);
      return;
    }
    print(out);
  });

  // coverage / export / info
  size_t min_title = 0, min_abstract = 0;
  auto* coverage = app.add_subcommand("coverage", "Distinct keyphrases per document");
  add_engine_option(coverage, engine_dir);
  coverage->add_option("--min-title-words", min_title, "Skip documents with shorter titles");
  coverage->add_option("--min-abstract-words", min_abstract,
                       "Skip documents with shorter abstracts");
  coverage->callback([&] {
    EngineHandle engine;
    char* out = nullptr;
    seer_status s = engine.open(engine_dir);
    if (s == SEER_OK) s = seer_coverage(engine.get(), min_title, min_abstract, &out);
    if (s != SEER_OK) {
      code = fail(s);
      return;
    }
    print(out);
  });

  auto* exp = app.add_subcommand("export", "Dump phrase and word statistics");
  add_engine_option(exp, engine_dir);
  exp->callback([&] {
    EngineHandle engine;
    char* out = nullptr;
    seer_status s = engine.open(engine_dir);
    if (s == SEER_OK) s = seer_export_stats(engine.get(), &out);
    if (s != SEER_OK) {
      code = fail(s);
      return;
    }
    print(out);
  });

  auto* kp = app.add_subcommand("keyphrases", "Per-document keyphrase counts, JSON lines");
  add_engine_option(kp, engine_dir);
  kp->callback([&] {
    EngineHandle engine;
    char* out = nullptr;
    seer_status s = engine.open(engine_dir);
    if (s == SEER_OK) s = seer_keyphrases(engine.get(), &out);
    if (s != SEER_OK) {
      code = fail(s);
      return;
    }
    std::fputs(out, stdout);
    std::fflush(stdout);
    seer_free(out);
  });

  auto* info = app.add_subcommand("info", "Summarize an engine directory");
  add_engine_option(info, engine_dir);
  info->callback([&] {
    EngineHandle engine;
    char* out = nullptr;
    seer_status s = engine.open(engine_dir);
    if (s == SEER_OK) s = seer_engine_info(engine.get(), &out);
    if (s != SEER_OK) {
      code = fail(s);
      return;
    }
    print(out);
  });

  // serve
  seer_serve_options serve_opts;
  seer_serve_options_init(&serve_opts);
  std::string config_path, host, cors;
  int port = -1;
  bool persist = false;
  auto* serve = app.add_subcommand("serve", "Serve the HTTP JSON API");
  serve->add_option("--config", config_path, "Key-value config file");
  serve->add_option("--engine", engine_dir, "Engine directory")->envname("SEERKIT_ENGINE");
  serve->add_option("--host", host, "Listen address");
  serve->add_option("--port", port, "Listen port, 0 for any")->check(CLI::Range(0, 65535));
  serve->add_option("--cors-origin", cors, "Allowed browser origin");
  serve->add_flag("--persist-updates", persist, "Write POSTed documents back to disk");
  serve->callback([&] {
    serve_opts.config_path = c_or_null(config_path);
    serve_opts.engine_dir = c_or_null(engine_dir);
    serve_opts.host = c_or_null(host);
    serve_opts.port = port;
    serve_opts.cors_origin = c_or_null(cors);
    if (persist) serve_opts.persist_updates = 1;

    sigset_t stop_signals;
    sigemptyset(&stop_signals);
    sigaddset(&stop_signals, SIGINT);
    sigaddset(&stop_signals, SIGTERM);
    pthread_sigmask(SIG_BLOCK, &stop_signals, nullptr);
    std::thread waiter([stop_signals] {
      int sig = 0;
      sigwait(&stop_signals, &sig);
      seer_serve_stop();
    });
    auto on_ready = [](int bound, void*) {
      std::printf("{\"listening\":%d}\n", bound);
      std::fflush(stdout);
    };
    seer_status s = seer_serve(&serve_opts, on_ready, nullptr);
    pthread_kill(waiter.native_handle(), SIGTERM);
    waiter.join();
    if (s != SEER_OK) code = fail(s);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "seerkit: usage: " << e.what() << "\n";
    return kExitInput;
  }
  return code;
}
