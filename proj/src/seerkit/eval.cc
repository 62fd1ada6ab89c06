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

#include "seerkit/eval.h"

#include <algorithm>
#include <fstream>
#include <set>

#include "seerkit/error.h"

namespace seerkit {
namespace {

std::optional<std::string> name_key(const std::string& name, NameMatch match) {
  if (match == NameMatch::kVerbatim) {
    if (name.empty()) return std::nullopt;
    return name;
  }
  try {
    return normalize_name(name);
  } catch (const Error&) {
    return std::nullopt;
  }
}

std::set<std::string> key_set(const std::vector<std::string>& names, size_t n,
                              NameMatch match) {
  auto keys = top_name_keys(names, n, match);
  return {keys.begin(), keys.end()};
}

nlohmann::json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot read '" + path + "'");
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParse, path + ": " + e.what());
  }
}

std::vector<std::string> name_list(const nlohmann::json& j, const std::string& what) {
  if (!j.is_array()) throw Error(ErrorCode::kParse, what + " must be an array of names");
  std::vector<std::string> out;
  for (const auto& v : j) {
    if (!v.is_string()) throw Error(ErrorCode::kParse, what + " must hold strings");
    out.push_back(v.get<std::string>());
  }
  return out;
}

}  // namespace

const char* name_match_name(NameMatch m) {
  return m == NameMatch::kVerbatim ? "verbatim" : "normalized";
}

std::vector<std::string> top_name_keys(const std::vector<std::string>& names,
                                       size_t n, NameMatch match) {
  std::vector<std::string> keys;
  for (size_t i = 0; i < names.size() && i < n; ++i) {
    auto key = name_key(names[i], match);
    if (key && std::find(keys.begin(), keys.end(), *key) == keys.end()) {
      keys.push_back(std::move(*key));
    }
  }
  return keys;
}

size_t consensus_at_n(std::span<const std::vector<std::string>> lists, size_t i,
                      int n, NameMatch match) {
  if (n <= 0) throw Error(ErrorCode::kInvalidArgument, "n must be positive");
  if (lists.size() < 2) {
    throw Error(ErrorCode::kInvalidArgument, "consensus needs at least two systems");
  }
  if (i >= lists.size()) throw Error(ErrorCode::kInvalidArgument, "system index out of range");
  const auto top_n = static_cast<size_t>(n);
  const std::set<std::string> mine = key_set(lists[i], top_n, match);
  std::set<std::string> agreed;
  for (size_t k = 0; k < lists.size(); ++k) {
    if (k == i) continue;
    for (const std::string& key : key_set(lists[k], top_n, match)) {
      if (mine.contains(key)) agreed.insert(key);
    }
  }
  return agreed.size();
}

double precision_at_k(const std::vector<std::string>& run,
                      const std::vector<std::string>& truth, int k, NameMatch match) {
  if (k <= 0) throw Error(ErrorCode::kInvalidArgument, "k must be positive");
  const std::set<std::string> relevant = key_set(truth, truth.size(), match);
  size_t hits = 0;
  for (const std::string& key : top_name_keys(run, static_cast<size_t>(k), match)) {
    if (relevant.contains(key)) ++hits;
  }
  return static_cast<double>(hits) / static_cast<double>(k);
}

RankedList gs_star_rank(const Index& index, const Query& q, size_t k,
                        const RankConfig& cfg) {
  if (k == 0) throw Error(ErrorCode::kInvalidArgument, "k must be at least 1");
  const Corpus& corpus = index.corpus();
  std::set<AuthorIndex> candidates;
  for (const ScoredDoc& sd : top_documents(index, q.words, cfg)) {
    for (AuthorIndex a : corpus.doc_authors(sd.doc)) candidates.insert(a);
  }
  RankedList out;
  for (AuthorIndex a : candidates) {
    uint64_t total = 0;
    for (DocIndex d : corpus.author(a).docs) total += corpus.in_citations(d);
    out.push_back({a, static_cast<double>(total)});
  }
  sort_authors(corpus, out);
  if (out.size() > k) out.resize(k);
  return out;
}

SystemRun parse_run(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("system") || !j["system"].is_string() ||
      !j.contains("results") || !j["results"].is_object()) {
    throw Error(ErrorCode::kParse,
                "run file must be {\"system\": str, \"results\": {query: [names]}}");
  }
  SystemRun run;
  run.system = j["system"].get<std::string>();
  for (const auto& [query, names] : j["results"].items()) {
    run.results[query] = name_list(names, "results['" + query + "']");
  }
  return run;
}

GroundTruth parse_truth(const nlohmann::json& j) {
  if (!j.is_object()) throw Error(ErrorCode::kParse, "truth file must be {query: [names]}");
  GroundTruth truth;
  for (const auto& [query, names] : j.items()) {
    truth[query] = name_list(names, "truth['" + query + "']");
  }
  return truth;
}

SystemRun read_run(const std::string& path) { return parse_run(read_file(path)); }
GroundTruth read_truth(const std::string& path) { return parse_truth(read_file(path)); }

nlohmann::json evaluate(std::span<const SystemRun> runs,
                        const std::optional<GroundTruth>& truth,
                        const EvalOptions& opts) {
  if (runs.empty()) throw Error(ErrorCode::kInvalidArgument, "no runs given");
  for (int n : opts.ns) {
    if (n <= 0) throw Error(ErrorCode::kInvalidArgument, "n must be positive");
  }
  for (int k : opts.ks) {
    if (k <= 0) throw Error(ErrorCode::kInvalidArgument, "k must be positive");
  }
  std::set<std::string> queries;
  for (const SystemRun& run : runs) {
    for (const auto& [q, names] : run.results) queries.insert(q);
  }
  const std::vector<std::string> empty;
  nlohmann::json systems = nlohmann::json::array();
  for (size_t i = 0; i < runs.size(); ++i) {
    nlohmann::json per_query = nlohmann::json::object();
    std::map<std::string, std::pair<double, size_t>> totals;
    for (const std::string& q : queries) {
      nlohmann::json row = nlohmann::json::object();
      if (runs.size() >= 2) {
        std::vector<std::vector<std::string>> lists;
        for (const SystemRun& run : runs) {
          auto it = run.results.find(q);
          lists.push_back(it == run.results.end() ? empty : it->second);
        }
        for (int n : opts.ns) {
          const std::string key = "S@" + std::to_string(n);
          const size_t s = consensus_at_n(lists, i, n, opts.match);
          row[key] = s;
          totals[key].first += static_cast<double>(s);
          totals[key].second += 1;
        }
      }
      if (truth) {
        auto t = truth->find(q);
        if (t != truth->end() && !t->second.empty()) {
          auto r = runs[i].results.find(q);
          const auto& run_names = r == runs[i].results.end() ? empty : r->second;
          for (int k : opts.ks) {
            const std::string key = "P@" + std::to_string(k);
            const double p = precision_at_k(run_names, t->second, k, opts.match);
            row[key] = p;
            totals[key].first += p;
            totals[key].second += 1;
          }
        }
      }
      per_query[q] = std::move(row);
    }
    nlohmann::json macro = nlohmann::json::object();
    for (const auto& [key, sum_count] : totals) {
      macro[key] = sum_count.first / static_cast<double>(sum_count.second);
    }
    systems.push_back({{"system", runs[i].system},
                       {"queries", std::move(per_query)},
                       {"macro", std::move(macro)}});
  }
  return {{"name_match", name_match_name(opts.match)},
          {"n", opts.ns},
          {"k", opts.ks},
          {"systems", std::move(systems)}};
}

}  // namespace seerkit
