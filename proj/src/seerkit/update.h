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

// Additive updates. Documents are appended, never edited or removed, and
// the lexicon stays fixed until the next full build.

#pragma once

#include <memory>
#include <set>
#include <vector>

#include <json.hpp>

#include "seerkit/index.h"

namespace seerkit {

struct UpdateBatch {
  std::vector<Document> documents;
  std::vector<DocKeyphrases> keyphrases;  // parallel to documents
  std::set<std::string> touched_authors;  // normalized keys
  std::set<PhraseId> touched_phrases;
  std::map<std::string, uint32_t> citation_increments;  // existing doc id -> +n
};

struct UpdateSummary {
  size_t documents_added = 0;
  size_t authors_added = 0;
  size_t authors_touched = 0;
  size_t phrases_touched = 0;
  uint64_t citations_incremented = 0;
  IngestReport issues;  // dropped author names

  bool operator==(const UpdateSummary&) const = default;
};

nlohmann::json to_json(const UpdateSummary& summary);

// Validates and derives a batch against a snapshot. Throws
// Error(kDuplicate) naming the id if any document id repeats within the
// batch or already exists.
UpdateBatch prepare_update(const Index& index, std::vector<Document> documents);

// Produces the successor snapshot. `base` is left untouched.
std::shared_ptr<Index> apply_update(const Index& base, const UpdateBatch& batch,
                                    UpdateSummary* summary);

}  // namespace seerkit
