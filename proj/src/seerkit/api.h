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

// JSON payloads shared by the C API, the command line and the HTTP service,
// so all three answer a query with the same bytes.

#pragma once

#include <string_view>
#include <vector>

#include <json.hpp>

#include "seerkit/engine.h"
#include "seerkit/ranking.h"

namespace seerkit::api {

inline constexpr size_t kRelatedInExpertResponse = 5;
inline constexpr size_t kSupportDocs = 3;

nlohmann::json experts_response(const Index& index, std::string_view query, size_t k);
nlohmann::json expertise_response(const Index& index, std::string_view author, size_t k);
nlohmann::json related_response(const Index& index, std::string_view query, size_t k);
nlohmann::json gs_star_response(const Index& index, std::string_view query, size_t k);
nlohmann::json info_response(const Index& index);
// One JSON object per line: {"id", "phrases": [{"p", "c"}], "len"}, in
// corpus order, phrases sorted by text.
std::string keyphrase_dump(const Index& index);

nlohmann::json coverage_response(const Index& index, size_t min_title_words,
                                 size_t min_abstract_words);

// Documents of an update request: a JSON array of records or an object
// {"documents": [...]}. Throws Error(kParse) on any malformed record.
std::vector<Document> parse_document_batch(const nlohmann::json& body);

}  // namespace seerkit::api
