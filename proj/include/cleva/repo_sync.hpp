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

#ifndef CLEVA_REPO_SYNC_HPP_
#define CLEVA_REPO_SYNC_HPP_

// Client for a static methods repository: <repo>/manifest.json lists
// published descriptors with their SHA-256 digests. Descriptors are verified
// before they reach the cache or the caller.

#include <chrono>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cleva/descriptor.hpp"

namespace cleva::sync {

inline constexpr int kManifestVersion = 1;

struct ManifestMethod {
  std::string id;
  std::string label;
  std::string url;
  std::string sha256;

  friend bool operator==(const ManifestMethod&, const ManifestMethod&) = default;
};

struct Manifest {
  int version = kManifestVersion;
  std::vector<ManifestMethod> methods;

  const ManifestMethod* Find(std::string_view id) const;
};

// Throws Error(kManifestFormat) or Error(kVersion).
Manifest ParseManifest(std::string_view text);

// Lowercase hex SHA-256 of raw bytes.
std::string Sha256Hex(std::string_view bytes);

struct HttpResponse {
  int status = 0;  // 200, or 304 when the If-None-Match tag still matches
  std::string body;
  std::string etag;
  std::string location;  // redirect target, handled inside the transport
};

class Transport {
 public:
  virtual ~Transport() = default;
  // Throws NetworkError when the resource cannot be retrieved.
  virtual HttpResponse Get(const std::string& url, const std::string& if_none_match = {}) = 0;
};

struct HttpOptions {
  int attempts = 3;
  std::chrono::milliseconds backoff{200};
  std::chrono::seconds connect_timeout{5};
  std::chrono::seconds read_timeout{15};
};

// Plain GET over http:// or https://, retrying connection failures.
class HttpTransport : public Transport {
 public:
  explicit HttpTransport(HttpOptions options = {});
  HttpResponse Get(const std::string& url, const std::string& if_none_match = {}) override;

 private:
  HttpResponse GetOnce(const std::string& url, const std::string& if_none_match);

  HttpOptions options_;
};

struct CachedMethod {
  std::string id;
  std::string label;
  std::string sha256;
  std::string fetched_at;  // ISO-8601 UTC
};

// On-disk cache. Descriptor bytes live under objects/<sha256>; index/<id>.json
// points at them. Every file is written to a temporary name and renamed into
// place, so a crashed write never exposes a partial entry.
class Cache {
 public:
  explicit Cache(std::filesystem::path root);

  // $XDG_CACHE_HOME/cleva-compass, falling back to ~/.cache/cleva-compass.
  static std::filesystem::path DefaultRoot();

  const std::filesystem::path& root() const { return root_; }

  // Cached bytes for `id` if present, pointing at `sha256`, and intact.
  std::optional<std::string> Load(std::string_view id, std::string_view sha256) const;

  // Caller guarantees Sha256Hex(bytes) == sha256.
  void Store(const ManifestMethod& method, std::string_view bytes);

  // Sorted by id; entries failing verification are skipped with a warning.
  std::vector<CachedMethod> List(std::vector<std::string>* warnings = nullptr) const;

  // Last manifest seen for a repository, with its entity tag.
  std::optional<HttpResponse> LoadManifest(std::string_view repo_url) const;
  void StoreManifest(std::string_view repo_url, const HttpResponse& response);

 private:
  void WriteAtomic(const std::filesystem::path& target, std::string_view bytes) const;

  std::filesystem::path root_;
};

// GET <repo_url>/manifest.json. With a cache, a conditional request is sent
// and a 304 reuses the cached manifest bytes.
Manifest FetchManifest(std::string_view repo_url, Transport& transport, Cache* cache = nullptr);

// Returns the verified entry, from cache when the digest matches (no network
// request), otherwise fetched, verified, parsed strictly and cached.
// Throws Error(kNotFound), Error(kIntegrity), Error(kSchema), NetworkError.
CompassEntry DownloadMethod(const Manifest& manifest, std::string_view id, Cache& cache,
                            Transport& transport);

std::vector<CachedMethod> ListCached(const Cache& cache,
                                     std::vector<std::string>* warnings = nullptr);

}  // namespace cleva::sync

#endif  // CLEVA_REPO_SYNC_HPP_
