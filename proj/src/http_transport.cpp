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

#include "httplib.h"

#include <thread>

#include "cleva/error.hpp"
#include "cleva/repo_sync.hpp"

namespace cleva::sync {
namespace {

struct SplitUrl {
  std::string origin;  // scheme://host[:port]
  std::string path;
};

SplitUrl Split(const std::string& url) {
  const auto scheme_end = url.find("://");
  if (scheme_end == std::string::npos) {
    throw Error(ErrorCode::kUsage, "not an absolute URL: " + url);
  }
  const auto path_start = url.find('/', scheme_end + 3);
  if (path_start == std::string::npos) return {url, "/"};
  return {url.substr(0, path_start), url.substr(path_start)};
}

bool IsRedirect(int status) {
  return status == 301 || status == 302 || status == 303 || status == 307 || status == 308;
}

std::string Resolve(const std::string& base, const std::string& location) {
  if (location.find("://") != std::string::npos) return location;
  const SplitUrl b = Split(base);
  if (!location.empty() && location[0] == '/') return b.origin + location;
  return b.origin + b.path.substr(0, b.path.rfind('/') + 1) + location;
}

}  // namespace

HttpTransport::HttpTransport(HttpOptions options) : options_(options) {}

HttpResponse HttpTransport::Get(const std::string& url, const std::string& if_none_match) {
  // Redirects are followed here rather than by httplib, which would also
  // treat 304 Not Modified as a redirect.
  constexpr int kMaxRedirects = 5;
  std::string current = url;
  for (int hop = 0; hop <= kMaxRedirects; ++hop) {
    HttpResponse response = GetOnce(current, if_none_match);
    if (response.location.empty()) return response;
    current = Resolve(current, response.location);
  }
  throw NetworkError("GET " + url + " failed: too many redirects", url, 1);
}

HttpResponse HttpTransport::GetOnce(const std::string& url, const std::string& if_none_match) {
  const SplitUrl target = Split(url);
  httplib::Client client(target.origin);
  client.set_connection_timeout(options_.connect_timeout);
  client.set_read_timeout(options_.read_timeout);

  httplib::Headers headers;
  if (!if_none_match.empty()) headers.emplace("If-None-Match", if_none_match);

  const int attempts = std::max(1, options_.attempts);
  std::string last_error = "no attempt made";
  for (int attempt = 1; attempt <= attempts; ++attempt) {
    if (attempt > 1) std::this_thread::sleep_for(options_.backoff * (attempt - 1));
    auto result = client.Get(target.path, headers);
    if (!result) {
      last_error = httplib::to_string(result.error());
      continue;
    }
    const int status = result->status;
    HttpResponse response;
    response.status = status;
    response.etag = result->get_header_value("ETag");
    if (status == 200) {
      response.body = result->body;
      return response;
    }
    if (status == 304) return response;
    if (IsRedirect(status) && result->has_header("Location")) {
      response.location = result->get_header_value("Location");
      return response;
    }
    // Server errors are retried; client errors are final.
    last_error = "HTTP " + std::to_string(status);
    if (status < 500) throw NetworkError("GET " + url + " failed: " + last_error, url, attempt);
  }
  throw NetworkError("GET " + url + " failed after " + std::to_string(attempts) +
                         " attempt(s): " + last_error,
                     url, attempts);
}

}  // namespace cleva::sync
