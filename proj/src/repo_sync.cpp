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

#include "cleva/repo_sync.hpp"

#include <unistd.h>

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <map>
#include <mutex>
#include <set>
#include <sstream>

#include <fmt/chrono.h>
#include <fmt/format.h>

#include "cleva/error.hpp"
#include "json.hpp"

namespace cleva::sync {
namespace fs = std::filesystem;
namespace {

using nlohmann::json;

[[noreturn]] void FormatFail(const std::string& path, const std::string& message) {
  throw Error(ErrorCode::kManifestFormat, "manifest " + path + ": " + message, path);
}

bool IsSlug(std::string_view id) {
  if (id.empty() || id.size() > 128 || id.front() == '.') return false;
  return std::all_of(id.begin(), id.end(), [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '-' || c == '_' || c == '.';
  });
}

bool IsHexDigest(std::string_view s) {
  return s.size() == 64 && std::all_of(s.begin(), s.end(), [](char c) {
           return (c >= '0' && c <= '9') || (c >= 'a' && c <= 'f');
         });
}

bool IsAbsoluteUrl(std::string_view url) {
  for (std::string_view scheme : {"http://", "https://"}) {
    if (url.starts_with(scheme) && url.size() > scheme.size()) return true;
  }
  return false;
}

std::string ReadFile(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string NowIso8601() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  return fmt::format("{:%Y-%m-%dT%H:%M:%SZ}", fmt::gmtime(now));
}

// Serializes cache mutations per (root, id) within the process.
std::mutex& EntryMutex(const fs::path& root, std::string_view id) {
  static std::mutex registry_mutex;
  static std::map<std::string, std::unique_ptr<std::mutex>> registry;
  std::lock_guard<std::mutex> lock(registry_mutex);
  auto& slot = registry[root.string() + "\n" + std::string(id)];
  if (!slot) slot = std::make_unique<std::mutex>();
  return *slot;
}

std::string ManifestUrl(std::string_view repo_url) {
  std::string url(repo_url);
  while (!url.empty() && url.back() == '/') url.pop_back();
  return url + "/manifest.json";
}

}  // namespace

const ManifestMethod* Manifest::Find(std::string_view id) const {
  for (const auto& m : methods) {
    if (m.id == id) return &m;
  }
  return nullptr;
}

Manifest ParseManifest(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::kManifestFormat, std::string("manifest is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) FormatFail("", "top level must be an object");
  auto version = doc.find("version");
  if (version == doc.end()) FormatFail("version", "missing required field");
  if (!version->is_number_integer() || version->get<std::int64_t>() != kManifestVersion) {
    throw Error(ErrorCode::kVersion, "unsupported manifest version: " + version->dump(), "version");
  }
  auto methods = doc.find("methods");
  if (methods == doc.end() || !methods->is_array()) FormatFail("methods", "must be an array");

  Manifest manifest;
  std::set<std::string> ids;
  for (std::size_t i = 0; i < methods->size(); ++i) {
    const json& m = (*methods)[i];
    const std::string path = "methods[" + std::to_string(i) + "]";
    if (!m.is_object()) FormatFail(path, "must be an object");
    ManifestMethod method;
    for (auto [field, target] : {std::pair{"id", &method.id}, std::pair{"label", &method.label},
                                 std::pair{"url", &method.url}, std::pair{"sha256", &method.sha256}}) {
      auto it = m.find(field);
      if (it == m.end() || !it->is_string()) {
        FormatFail(path + "." + field, "missing or not a string");
      }
      *target = it->get<std::string>();
    }
    if (!IsSlug(method.id)) FormatFail(path + ".id", "must be a slug of [a-z0-9._-]");
    if (!ids.insert(method.id).second) FormatFail(path + ".id", "duplicate id '" + method.id + "'");
    if (!IsHexDigest(method.sha256)) FormatFail(path + ".sha256", "must be 64 lowercase hex chars");
    if (!IsAbsoluteUrl(method.url)) FormatFail(path + ".url", "must be an absolute http(s) URL");
    manifest.methods.push_back(std::move(method));
  }
  return manifest;
}

Cache::Cache(fs::path root) : root_(std::move(root)) {}

fs::path Cache::DefaultRoot() {
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg != nullptr && *xdg != '\0') {
    return fs::path(xdg) / "cleva-compass";
  }
  if (const char* home = std::getenv("HOME"); home != nullptr && *home != '\0') {
    return fs::path(home) / ".cache" / "cleva-compass";
  }
  return fs::temp_directory_path() / "cleva-compass";
}

void Cache::WriteAtomic(const fs::path& target, std::string_view bytes) const {
  static std::atomic<unsigned> counter{0};
  std::error_code ec;
  fs::create_directories(target.parent_path(), ec);
  fs::create_directories(root_ / "tmp", ec);
  if (ec) throw Error(ErrorCode::kIo, "cannot create cache directory: " + ec.message());
  const fs::path tmp = root_ / "tmp" /
                       fmt::format("{}.{}.{}.tmp", target.filename().string(), ::getpid(),
                                   counter.fetch_add(1));
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    out.flush();
    if (!out) throw Error(ErrorCode::kIo, "cannot write " + tmp.string());
  }
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw Error(ErrorCode::kIo, "cannot move " + tmp.string() + " into place");
  }
}

std::optional<std::string> Cache::Load(std::string_view id, std::string_view sha256) const {
  if (!IsSlug(id) || !IsHexDigest(sha256)) return std::nullopt;
  const fs::path index = root_ / "index" / (std::string(id) + ".json");
  std::error_code ec;
  if (!fs::exists(index, ec)) return std::nullopt;
  try {
    const json meta = json::parse(ReadFile(index));
    if (meta.value("sha256", "") != sha256) return std::nullopt;
    std::string bytes = ReadFile(root_ / "objects" / std::string(sha256));
    if (Sha256Hex(bytes) != sha256) return std::nullopt;
    return bytes;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

void Cache::Store(const ManifestMethod& method, std::string_view bytes) {
  std::lock_guard<std::mutex> lock(EntryMutex(root_, method.id));
  // Object first: the index never points at a missing object.
  WriteAtomic(root_ / "objects" / method.sha256, bytes);
  nlohmann::ordered_json meta = {{"id", method.id},
                                 {"label", method.label},
                                 {"sha256", method.sha256},
                                 {"fetched_at", NowIso8601()}};
  WriteAtomic(root_ / "index" / (method.id + ".json"), meta.dump(2) + "\n");
}

std::vector<CachedMethod> Cache::List(std::vector<std::string>* warnings) const {
  std::vector<CachedMethod> out;
  const fs::path index_dir = root_ / "index";
  std::error_code ec;
  if (!fs::exists(index_dir, ec)) return out;
  auto warn = [&](const std::string& message) {
    if (warnings != nullptr) warnings->push_back(message);
  };
  fs::directory_iterator it(index_dir, ec);
  if (ec) throw Error(ErrorCode::kIo, "cannot read cache index: " + ec.message());
  for (const auto& file : it) {
    if (file.path().extension() != ".json") continue;
    const std::string id = file.path().stem().string();
    try {
      const json meta = json::parse(ReadFile(file.path()));
      const std::string sha = meta.at("sha256").get<std::string>();
      const fs::path object = root_ / "objects" / sha;
      if (!IsHexDigest(sha) || !fs::exists(object) || Sha256Hex(ReadFile(object)) != sha) {
        warn("cache entry '" + id + "' failed digest verification; skipped");
        continue;
      }
      out.push_back({meta.at("id").get<std::string>(), meta.at("label").get<std::string>(), sha,
                     meta.at("fetched_at").get<std::string>()});
    } catch (const std::exception& e) {
      warn("cache entry '" + id + "' is unreadable; skipped");
    }
  }
  std::sort(out.begin(), out.end(),
            [](const CachedMethod& a, const CachedMethod& b) { return a.id < b.id; });
  return out;
}

std::optional<HttpResponse> Cache::LoadManifest(std::string_view repo_url) const {
  const fs::path path = root_ / "manifests" / (Sha256Hex(repo_url) + ".json");
  std::error_code ec;
  if (!fs::exists(path, ec)) return std::nullopt;
  try {
    const json stored = json::parse(ReadFile(path));
    HttpResponse r;
    r.status = 200;
    r.body = stored.at("body").get<std::string>();
    r.etag = stored.at("etag").get<std::string>();
    return r;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

void Cache::StoreManifest(std::string_view repo_url, const HttpResponse& response) {
  nlohmann::ordered_json stored = {
      {"repo", repo_url}, {"etag", response.etag}, {"body", response.body}};
  WriteAtomic(root_ / "manifests" / (Sha256Hex(repo_url) + ".json"), stored.dump(2) + "\n");
}

Manifest FetchManifest(std::string_view repo_url, Transport& transport, Cache* cache) {
  if (!IsAbsoluteUrl(repo_url)) {
    throw Error(ErrorCode::kUsage, "repository URL must be absolute http(s): " +
                                       std::string(repo_url));
  }
  const std::string url = ManifestUrl(repo_url);
  std::optional<HttpResponse> cached;
  if (cache != nullptr) cached = cache->LoadManifest(repo_url);

  HttpResponse response =
      transport.Get(url, cached && !cached->etag.empty() ? cached->etag : std::string());
  if (response.status == 304 && cached) return ParseManifest(cached->body);
  Manifest manifest = ParseManifest(response.body);
  if (cache != nullptr && !response.etag.empty()) cache->StoreManifest(repo_url, response);
  return manifest;
}

CompassEntry DownloadMethod(const Manifest& manifest, std::string_view id, Cache& cache,
                            Transport& transport) {
  const ManifestMethod* method = manifest.Find(id);
  if (method == nullptr) {
    throw Error(ErrorCode::kNotFound, "no method '" + std::string(id) + "' in manifest");
  }
  if (auto bytes = cache.Load(method->id, method->sha256)) return ParseEntryFile(*bytes);

  HttpResponse response = transport.Get(method->url);
  const std::string digest = Sha256Hex(response.body);
  if (digest != method->sha256) {
    throw Error(ErrorCode::kIntegrity,
                "digest mismatch for '" + method->id + "': manifest " + method->sha256 +
                    ", payload " + digest,
                method->id);
  }
  CompassEntry entry = ParseEntryFile(response.body);
  cache.Store(*method, response.body);
  return entry;
}

std::vector<CachedMethod> ListCached(const Cache& cache, std::vector<std::string>* warnings) {
  return cache.List(warnings);
}

}  // namespace cleva::sync
