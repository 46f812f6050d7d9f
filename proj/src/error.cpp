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

#include "cleva/error.hpp"

#include <utility>

namespace cleva {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kSyntax: return "SyntaxError";
    case ErrorCode::kSchema: return "SchemaError";
    case ErrorCode::kVersion: return "VersionError";
    case ErrorCode::kMissingEntry: return "MissingEntry";
    case ErrorCode::kInvalidTask: return "InvalidTask";
    case ErrorCode::kLengthMismatch: return "LengthMismatch";
    case ErrorCode::kIndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::kRaggedInput: return "RaggedInput";
    case ErrorCode::kZeroProbability: return "ZeroProbability";
    case ErrorCode::kInvalidCounts: return "InvalidCounts";
    case ErrorCode::kInvalidTrace: return "InvalidTrace";
    case ErrorCode::kEscape: return "EscapeError";
    case ErrorCode::kNetwork: return "NetworkError";
    case ErrorCode::kManifestFormat: return "ManifestFormatError";
    case ErrorCode::kIntegrity: return "IntegrityError";
    case ErrorCode::kNotFound: return "NotFound";
    case ErrorCode::kIo: return "IoError";
    case ErrorCode::kUsage: return "UsageError";
  }
  return "Error";
}

Error::Error(ErrorCode code, std::string message, std::string path)
    : std::runtime_error(std::move(message)), code_(code), path_(std::move(path)) {}

NetworkError::NetworkError(std::string message, std::string url, int attempts)
    : Error(ErrorCode::kNetwork, std::move(message)),
      url_(std::move(url)),
      attempts_(attempts) {}

}  // namespace cleva
