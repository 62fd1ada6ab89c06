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

#pragma once

#include <stdexcept>
#include <string>

namespace seerkit {

// Error categories. The C API maps these one-to-one onto seer_status values,
// the CLI onto exit codes and the service onto HTTP statuses.
enum class ErrorCode {
  kIo,              // unreadable/unwritable file or directory
  kConfig,          // bad option value, bad engine manifest
  kParse,           // malformed input document
  kAlreadyExists,   // output directory exists and --force not given
  kInvalidArgument, // empty query, non-positive k or n
  kNotFound,        // unknown author or document
  kNotInLexicon,    // related-phrase request for an OOV phrase
  kDuplicate,       // doc id already present
  kEmptyModel,      // |D| = 0
  kUnusableName,    // author name empty after stripping
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace seerkit
