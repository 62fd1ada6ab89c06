/*
 * Copyright 2026 The seerkit Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * seerkit C interface.
 *
 * Every call returns a seer_status. On failure a message describing the
 * error is available from seer_last_error() on the same thread until the
 * next call. Strings handed back through char** out-parameters are UTF-8
 * JSON documents owned by the caller and released with seer_free().
 *
 * An engine handle may be queried from many threads at once. Updates
 * (seer_add_*) are serialized internally and swap in a new snapshot
 * atomically; concurrent queries see either the old or the new state.
 */

#ifndef SEERKIT_SEERKIT_H_
#define SEERKIT_SEERKIT_H_

#include <stddef.h>

#if defined(_WIN32)
#define SEER_API __declspec(dllexport)
#else
#define SEER_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum seer_status {
  SEER_OK = 0,
  SEER_ERR_IO = 1,
  SEER_ERR_CONFIG = 2,
  SEER_ERR_PARSE = 3,
  SEER_ERR_ALREADY_EXISTS = 4,
  SEER_ERR_INVALID_ARGUMENT = 5,
  SEER_ERR_NOT_FOUND = 6,
  SEER_ERR_NOT_IN_LEXICON = 7,
  SEER_ERR_DUPLICATE = 8,
  SEER_ERR_EMPTY_MODEL = 9,
  SEER_ERR_UNUSABLE_NAME = 10,
  SEER_ERR_INTERNAL = 99
} seer_status;

typedef struct seer_engine seer_engine;

typedef struct seer_build_options {
  const char* corpus_path;         /* required, JSON lines */
  const char* wiki_dump_path;      /* optional */
  const char* category_edges_path; /* optional */
  const char* lexicon_path;        /* optional, replaces harvesting */
  const char* roots;               /* optional, "name:depth,..." */
  double mu;                       /* Dirichlet smoothing, default 2000 */
  size_t top_n;                    /* fallback document pool, default 1000 */
  int min_ngram_count;             /* title n-gram threshold, default 3 */
  unsigned threads;                /* 0 = hardware concurrency */
} seer_build_options;

typedef struct seer_serve_options {
  /* Optional key-value config file (keys: host, port, engine, cors_origin,
   * persist_updates). Fields below that are set override it. */
  const char* config_path;
  const char* host;        /* NULL = config or "127.0.0.1" */
  int port;                /* -1 = config or 8080; 0 picks a free port */
  const char* engine_dir;  /* loaded in the background; 503 until ready */
  const char* cors_origin; /* NULL = config or none */
  int persist_updates;     /* -1 = config or off; writes POSTs back */
} seer_serve_options;

SEER_API const char* seer_version(void);
SEER_API const char* seer_status_name(seer_status status);
SEER_API const char* seer_last_error(void);
SEER_API void seer_free(char* p);

SEER_API void seer_build_options_init(seer_build_options* opts);
/* report_json may be NULL. */
SEER_API seer_status seer_build(const seer_build_options* opts, seer_engine** out,
                                char** report_json);

SEER_API seer_status seer_engine_open(const char* dir, seer_engine** out);
SEER_API void seer_engine_close(seer_engine* engine);
SEER_API seer_status seer_engine_save(seer_engine* engine, const char* dir, int force);
SEER_API seer_status seer_engine_info(seer_engine* engine, char** out_json);

SEER_API seer_status seer_experts(seer_engine* engine, const char* query, size_t k,
                                  char** out_json);
SEER_API seer_status seer_expertise(seer_engine* engine, const char* author, size_t k,
                                    char** out_json);
SEER_API seer_status seer_related(seer_engine* engine, const char* query, size_t k,
                                  char** out_json);
SEER_API seer_status seer_gs_star(seer_engine* engine, const char* query, size_t k,
                                  char** out_json);

/* All-or-nothing updates. summary_json may be NULL. */
SEER_API seer_status seer_add_corpus_file(seer_engine* engine, const char* path,
                                          char** summary_json);
SEER_API seer_status seer_add_documents_json(seer_engine* engine, const char* json,
                                             char** summary_json);

SEER_API seer_status seer_export_stats(seer_engine* engine, char** out_json);
/* JSON lines, one {"id", "phrases": [{"p", "c"}], "len"} per document. */
SEER_API seer_status seer_keyphrases(seer_engine* engine, char** out_jsonl);
SEER_API seer_status seer_coverage(seer_engine* engine, size_t min_title_words,
                                   size_t min_abstract_words, char** out_json);

/* truth_path may be NULL. ns / ks may be NULL for the defaults 3, 5, 10. */
SEER_API seer_status seer_eval(const char* const* run_paths, size_t n_runs,
                               const char* truth_path, const int* ns, size_t n_ns,
                               const int* ks, size_t n_ks, int verbatim_names,
                               char** out_json);

SEER_API void seer_serve_options_init(seer_serve_options* opts);
/* Blocks serving HTTP until seer_serve_stop() or process exit. on_ready,
 * if given, is called with the bound port before serving starts. */
SEER_API seer_status seer_serve(const seer_serve_options* opts,
                                void (*on_ready)(int port, void* user), void* user);
SEER_API void seer_serve_stop(void);

#ifdef __cplusplus
}
#endif

#endif /* SEERKIT_SEERKIT_H_ */
