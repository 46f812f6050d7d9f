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

#ifndef CLEVA_SERVE_HPP_
#define CLEVA_SERVE_HPP_

// Local HTTP API backing the web builder. Every handler is a pure call into
// the core plus read-only cache access.
//
//   GET  /api/methods     bundled + cached entries
//   GET  /api/tooltips    tooltip registry
//   POST /api/validate    document -> ValidationReport
//   POST /api/render      document -> image/svg+xml
//   POST /api/export-tex  document -> TikZ text
//   POST /api/metrics     experiment log -> metrics report
//
// Failures are JSON bodies {"code", "message", "path"}.

#include <filesystem>
#include <memory>
#include <string>
#include <string_view>

namespace cleva::serve {

struct ServeOptions {
  std::filesystem::path cache_root;
};

struct ApiResponse {
  int status = 200;
  std::string content_type;
  std::string body;
};

ApiResponse HandleMethods(const ServeOptions& options);
ApiResponse HandleTooltips();
ApiResponse HandleValidate(std::string_view body);
ApiResponse HandleRender(std::string_view body);
ApiResponse HandleExportTex(std::string_view body);
ApiResponse HandleMetrics(std::string_view body);

class Server {
 public:
  explicit Server(ServeOptions options);
  ~Server();
  Server(const Server&) = delete;
  Server& operator=(const Server&) = delete;

  // Returns the bound port, or -1 on failure. Port 0 picks a free port.
  int Bind(const std::string& host, int port);
  // Blocks until Stop().
  bool Listen();
  void Stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace cleva::serve

#endif  // CLEVA_SERVE_HPP_
