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

// Text normalization shared by the lexicon builder, the keyphrase matcher and
// query parsing. Everything that turns raw UTF-8 into tokens goes through
// here so that lexicon entries and document tokens always agree.

#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace seerkit::text {

// A maximal run of tokens not interrupted by clause punctuation
// (. , ; : ! ? brackets, double quotes, em dash, pipe). Phrases never span two
// segments. Intra-word joiners such as '-' or '\'' split tokens but do not end
// a segment.
using Segment = std::vector<std::string>;

// Lowercases, folds Latin diacritics to ASCII and splits into segments of
// unstemmed tokens. Code points outside the folding table are kept verbatim
// as word characters.
std::vector<Segment> segment_words(std::string_view utf8);

// Original Porter (1980) suffix stripping, one pass. Tokens that are not
// pure ASCII lowercase letters are returned unchanged.
std::string porter_stem(std::string_view word);

// The per-token normalization rule: porter_stem applied until it stops
// changing the token, which makes normalization idempotent.
std::string stem_token(std::string_view token);

// segment_words followed by stem_token on every token; empty segments are
// dropped.
std::vector<Segment> normalize_segments(std::string_view utf8);

// All normalized tokens of `utf8` concatenated across segment boundaries.
std::vector<std::string> normalize_tokens(std::string_view utf8);

std::string join(const std::vector<std::string>& tokens, char sep = ' ');

// Splits on single spaces; the inverse of join for normalized phrases.
std::vector<std::string> split(std::string_view joined, char sep = ' ');

// Counts words (unstemmed tokens) across all segments.
size_t count_words(std::string_view utf8);

}  // namespace seerkit::text
