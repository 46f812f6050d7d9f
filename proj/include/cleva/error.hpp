// Copyright 2026 The cleva-compass Authors
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

#ifndef CLEVA_ERROR_HPP_
#define CLEVA_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace cleva {

enum class ErrorCode {
  kSyntax,
  kSchema,
  kVersion,
  kMissingEntry,
  kInvalidTask,
  kLengthMismatch,
  kIndexOutOfRange,
  kRaggedInput,
  kZeroProbability,
  kInvalidCounts,
  kInvalidTrace,
  kEscape,
  kNetwork,
  kManifestFormat,
  kIntegrity,
  kNotFound,
  kIo,
  kUsage,
};

// Stable names used in diagnostics and in the serve API's {code, ...} bodies.
std::string_view ErrorCodeName(ErrorCode code);

// All failures raised by the library. `path` names the offending field
// (e.g. "entries[2].inner.online") when one exists, otherwise it is empty.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string message, std::string path = {});

  ErrorCode code() const noexcept { return code_; }
  const std::string& path() const noexcept { return path_; }

 private:
  ErrorCode code_;
  std::string path_;
};

class NetworkError : public Error {
 public:
  NetworkError(std::string message, std::string url, int attempts);

  const std::string& url() const noexcept { return url_; }
  int attempts() const noexcept { return attempts_; }

 private:
  std::string url_;
  int attempts_;
};

}  // namespace cleva

#endif  // CLEVA_ERROR_HPP_
