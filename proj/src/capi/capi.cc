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

#include "seerkit/seerkit.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <memory>
#include <mutex>
#include <string>
#include <thread>

#include "seerkit/api.h"
#include "seerkit/engine.h"
#include "seerkit/error.h"
#include "seerkit/eval.h"
#include "service/service.h"

struct seer_engine {
  std::shared_ptr<seerkit::Engine> engine;
};

namespace {

thread_local std::string g_last_error;

std::mutex g_serve_mu;
seerkit::service::Service* g_service = nullptr;

seer_status to_status(seerkit::ErrorCode code) {
  using seerkit::ErrorCode;
  switch (code) {
    case ErrorCode::kIo: return SEER_ERR_IO;
    case ErrorCode::kConfig: return SEER_ERR_CONFIG;
    case ErrorCode::kParse: return SEER_ERR_PARSE;
    case ErrorCode::kAlreadyExists: return SEER_ERR_ALREADY_EXISTS;
    case ErrorCode::kInvalidArgument: return SEER_ERR_INVALID_ARGUMENT;
    case ErrorCode::kNotFound: return SEER_ERR_NOT_FOUND;
    case ErrorCode::kNotInLexicon: return SEER_ERR_NOT_IN_LEXICON;
    case ErrorCode::kDuplicate: return SEER_ERR_DUPLICATE;
    case ErrorCode::kEmptyModel: return SEER_ERR_EMPTY_MODEL;
    case ErrorCode::kUnusableName: return SEER_ERR_UNUSABLE_NAME;
  }
  return SEER_ERR_INTERNAL;
}

template <typename F>
seer_status guarded(F&& f) {
  g_last_error.clear();
  try {
    f();
    return SEER_OK;
  } catch (const seerkit::Error& e) {
    g_last_error = e.what();
    return to_status(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return SEER_ERR_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return SEER_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown error";
    return SEER_ERR_INTERNAL;
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.data(), s.size() + 1);
  return out;
}

void emit(const nlohmann::json& j, char** out) {
  if (out) *out = dup_string(j.dump());
}

void require(bool ok, const char* what) {
  if (!ok) throw seerkit::Error(seerkit::ErrorCode::kInvalidArgument, what);
}

std::string opt_string(const char* s) { return s ? std::string(s) : std::string(); }

}  // namespace

extern "C" {

const char* seer_version(void) { return "1.0.0"; }

const char* seer_status_name(seer_status status) {
  switch (status) {
    case SEER_OK: return "ok";
    case SEER_ERR_IO: return "io";
    case SEER_ERR_CONFIG: return "config";
    case SEER_ERR_PARSE: return "parse";
    case SEER_ERR_ALREADY_EXISTS: return "already_exists";
    case SEER_ERR_INVALID_ARGUMENT: return "invalid_argument";
    case SEER_ERR_NOT_FOUND: return "not_found";
    case SEER_ERR_NOT_IN_LEXICON: return "not_in_lexicon";
    case SEER_ERR_DUPLICATE: return "duplicate";
    case SEER_ERR_EMPTY_MODEL: return "empty_model";
    case SEER_ERR_UNUSABLE_NAME: return "unusable_name";
    case SEER_ERR_INTERNAL: return "internal";
  }
  return "unknown";
}

const char* seer_last_error(void) { return g_last_error.c_str(); }

void seer_free(char* p) { std::free(p); }

void seer_build_options_init(seer_build_options* opts) {
  if (!opts) return;
  *opts = seer_build_options{};
  opts->mu = 2000.0;
  opts->top_n = 1000;
  opts->min_ngram_count = 3;
}

seer_status seer_build(const seer_build_options* opts, seer_engine** out,
                       char** report_json) {
  return guarded([&] {
    require(opts && out, "options and output handle are required");
    require(opts->corpus_path && *opts->corpus_path, "corpus_path is required");
    seerkit::BuildOptions b;
    b.corpus_path = opts->corpus_path;
    b.wiki_dump_path = opt_string(opts->wiki_dump_path);
    b.category_edges_path = opt_string(opts->category_edges_path);
    b.lexicon_path = opt_string(opts->lexicon_path);
    if (opts->roots && *opts->roots) b.roots = seerkit::parse_roots(opts->roots);
    b.index.lm.mu = opts->mu;
    b.index.oov.top_n = opts->top_n;
    b.min_ngram_count = opts->min_ngram_count;
    b.threads = opts->threads;
    seerkit::BuildReport report;
    auto engine = seerkit::Engine::build(b, &report);
    auto handle = std::make_unique<seer_engine>();
    handle->engine = std::move(engine);
    emit(to_json(report), report_json);
    *out = handle.release();
  });
}

seer_status seer_engine_open(const char* dir, seer_engine** out) {
  return guarded([&] {
    require(dir && out, "directory and output handle are required");
    auto handle = std::make_unique<seer_engine>();
    handle->engine = seerkit::Engine::open(dir);
    *out = handle.release();
  });
}

void seer_engine_close(seer_engine* engine) { delete engine; }

seer_status seer_engine_save(seer_engine* engine, const char* dir, int force) {
  return guarded([&] {
    require(engine && dir, "engine and directory are required");
    engine->engine->save(dir, force != 0);
  });
}

seer_status seer_engine_info(seer_engine* engine, char** out_json) {
  return guarded([&] {
    require(engine && out_json, "engine and output are required");
    emit(seerkit::api::info_response(*engine->engine->snapshot()), out_json);
  });
}

seer_status seer_experts(seer_engine* engine, const char* query, size_t k,
                         char** out_json) {
  return guarded([&] {
    require(engine && query && out_json, "engine, query and output are required");
    emit(seerkit::api::experts_response(*engine->engine->snapshot(), query, k), out_json);
  });
}

seer_status seer_expertise(seer_engine* engine, const char* author, size_t k,
                           char** out_json) {
  return guarded([&] {
    require(engine && author && out_json, "engine, author and output are required");
    emit(seerkit::api::expertise_response(*engine->engine->snapshot(), author, k),
         out_json);
  });
}

seer_status seer_related(seer_engine* engine, const char* query, size_t k,
                         char** out_json) {
  return guarded([&] {
    require(engine && query && out_json, "engine, query and output are required");
    emit(seerkit::api::related_response(*engine->engine->snapshot(), query, k), out_json);
  });
}

seer_status seer_gs_star(seer_engine* engine, const char* query, size_t k,
                         char** out_json) {
  return guarded([&] {
    require(engine && query && out_json, "engine, query and output are required");
    emit(seerkit::api::gs_star_response(*engine->engine->snapshot(), query, k), out_json);
  });
}

seer_status seer_add_corpus_file(seer_engine* engine, const char* path,
                                 char** summary_json) {
  return guarded([&] {
    require(engine && path, "engine and path are required");
    auto docs = seerkit::read_documents_strict(path);
    emit(to_json(engine->engine->add_documents(std::move(docs))), summary_json);
  });
}

seer_status seer_add_documents_json(seer_engine* engine, const char* json,
                                    char** summary_json) {
  return guarded([&] {
    require(engine && json, "engine and JSON body are required");
    nlohmann::json body;
    try {
      body = nlohmann::json::parse(json);
    } catch (const nlohmann::json::exception& e) {
      throw seerkit::Error(seerkit::ErrorCode::kParse, std::string("invalid JSON: ") + e.what());
    }
    auto docs = seerkit::api::parse_document_batch(body);
    emit(to_json(engine->engine->add_documents(std::move(docs))), summary_json);
  });
}

seer_status seer_export_stats(seer_engine* engine, char** out_json) {
  return guarded([&] {
    require(engine && out_json, "engine and output are required");
    auto snap = engine->engine->snapshot();
    emit(seerkit::export_stats(snap->stats(), snap->lexicon(), snap->corpus()), out_json);
  });
}

seer_status seer_keyphrases(seer_engine* engine, char** out_jsonl) {
  return guarded([&] {
    require(engine && out_jsonl, "engine and output are required");
    *out_jsonl = dup_string(seerkit::api::keyphrase_dump(*engine->engine->snapshot()));
  });
}

seer_status seer_coverage(seer_engine* engine, size_t min_title_words,
                          size_t min_abstract_words, char** out_json) {
  return guarded([&] {
    require(engine && out_json, "engine and output are required");
    emit(seerkit::api::coverage_response(*engine->engine->snapshot(), min_title_words,
                                         min_abstract_words),
         out_json);
  });
}

seer_status seer_eval(const char* const* run_paths, size_t n_runs, const char* truth_path,
                      const int* ns, size_t n_ns, const int* ks, size_t n_ks,
                      int verbatim_names, char** out_json) {
  return guarded([&] {
    require(run_paths && n_runs > 0 && out_json, "at least one run file is required");
    std::vector<seerkit::SystemRun> runs;
    for (size_t i = 0; i < n_runs; ++i) {
      require(run_paths[i] != nullptr, "null run path");
      runs.push_back(seerkit::read_run(run_paths[i]));
    }
    std::optional<seerkit::GroundTruth> truth;
    if (truth_path) truth = seerkit::read_truth(truth_path);
    seerkit::EvalOptions opts;
    if (ns && n_ns) opts.ns.assign(ns, ns + n_ns);
    if (ks && n_ks) opts.ks.assign(ks, ks + n_ks);
    opts.match = verbatim_names ? seerkit::NameMatch::kVerbatim : seerkit::NameMatch::kNormalized;
    emit(seerkit::evaluate(runs, truth, opts), out_json);
  });
}

void seer_serve_options_init(seer_serve_options* opts) {
  if (!opts) return;
  *opts = seer_serve_options{};
  opts->port = -1;
  opts->persist_updates = -1;
}

seer_status seer_serve(const seer_serve_options* opts, void (*on_ready)(int, void*),
                       void* user) {
  return guarded([&] {
    require(opts != nullptr, "options are required");
    seerkit::service::ServiceConfig cfg;
    if (opts->config_path && *opts->config_path) {
      cfg = seerkit::service::read_config(opts->config_path);
    }
    if (opts->host && *opts->host) cfg.host = opts->host;
    if (opts->port >= 0) cfg.port = opts->port;
    if (opts->engine_dir && *opts->engine_dir) cfg.engine_dir = opts->engine_dir;
    if (opts->cors_origin) cfg.cors_origin = opts->cors_origin;
    if (opts->persist_updates >= 0) cfg.persist_updates = opts->persist_updates != 0;
    if (cfg.engine_dir.empty()) {
      throw seerkit::Error(seerkit::ErrorCode::kConfig, "no engine directory configured");
    }
    seerkit::service::Service service(cfg);
    const int port = service.bind();
    {
      std::lock_guard lock(g_serve_mu);
      g_service = &service;
    }
    std::string load_error;
    seerkit::ErrorCode load_code = seerkit::ErrorCode::kIo;
    bool load_failed = false;
    std::thread loader([&] {
      try {
        service.set_engine(std::shared_ptr<seerkit::Engine>(seerkit::Engine::open(cfg.engine_dir)));
      } catch (const seerkit::Error& e) {
        load_error = e.what();
        load_code = e.code();
        load_failed = true;
        service.stop();
      }
    });
    if (on_ready) on_ready(port, user);
    service.run();
    loader.join();
    {
      std::lock_guard lock(g_serve_mu);
      g_service = nullptr;
    }
    if (load_failed) throw seerkit::Error(load_code, load_error);
  });
}

void seer_serve_stop(void) {
  std::lock_guard lock(g_serve_mu);
  if (g_service) g_service->stop();
}

}  // extern "C"
