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

// Evaluation harness: cross-system consensus, precision at k and the
// citation-count baseline.

#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "seerkit/ranking.h"

namespace seerkit {

// How names from different systems are compared. kNormalized applies
// normalize_name; kVerbatim compares the strings as given.
enum class NameMatch { kNormalized, kVerbatim };

const char* name_match_name(NameMatch m);

struct SystemRun {
  std::string system;
  std::map<std::string, std::vector<std::string>> results;  // query -> names
};

using GroundTruth = std::map<std::string, std::vector<std::string>>;

// Distinct comparison keys of the first n names. Names that normalize to
// nothing are skipped.
std::vector<std::string> top_name_keys(const std::vector<std::string>& names,
                                       size_t n, NameMatch match);

// |union over k != i of (top-n of list i ∩ top-n of list k)|. Throws
// Error(kInvalidArgument) for n <= 0, fewer than two lists or i out of range.
size_t consensus_at_n(std::span<const std::vector<std::string>> lists, size_t i,
                      int n, NameMatch match = NameMatch::kNormalized);

// |top-k ∩ truth| / k; a short run counts its missing slots as misses.
// Throws Error(kInvalidArgument) for k <= 0.
double precision_at_k(const std::vector<std::string>& run,
                      const std::vector<std::string>& truth, int k,
                      NameMatch match = NameMatch::kNormalized);

// Authors of D_1 ranked by their total in-citations over all documents.
RankedList gs_star_rank(const Index& index, const Query& q, size_t k,
                        const RankConfig& cfg);

// File formats: run {"system": str, "results": {query: [name, ...]}},
// truth {query: [name, ...]}. Throw Error(kIo) / Error(kParse).
SystemRun read_run(const std::string& path);
GroundTruth read_truth(const std::string& path);
SystemRun parse_run(const nlohmann::json& j);
GroundTruth parse_truth(const nlohmann::json& j);

struct EvalOptions {
  std::vector<int> ns = {3, 5, 10};
  std::vector<int> ks = {3, 5, 10};
  NameMatch match = NameMatch::kNormalized;
};

// Per system and query: "S@n" (when two or more runs are given) and "P@k"
// (for queries with a non-empty truth list), plus macro averages.
nlohmann::json evaluate(std::span<const SystemRun> runs,
                        const std::optional<GroundTruth>& truth,
                        const EvalOptions& opts);

}  // namespace seerkit
