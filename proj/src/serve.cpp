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

#include "cleva/serve.hpp"

#include "httplib.h"
#include "json.hpp"

#include "cleva/bundled.hpp"
#include "cleva/descriptor.hpp"
#include "cleva/error.hpp"
#include "cleva/experiment_log.hpp"
#include "cleva/render.hpp"
#include "cleva/repo_sync.hpp"
#include "cleva/tooltips.hpp"

namespace cleva::serve {
namespace {

using nlohmann::ordered_json;

constexpr const char* kJson = "application/json";
constexpr std::size_t kMaxRequestBytes = 1 << 20;

int StatusFor(ErrorCode code) {
  switch (code) {
    case ErrorCode::kSyntax:
    case ErrorCode::kUsage:
      return 400;
    case ErrorCode::kNotFound:
      return 404;
    case ErrorCode::kIo:
      return 500;
    default:
      return 422;
  }
}

ApiResponse ErrorResponse(int status, std::string_view code, std::string_view message,
                          std::string_view path) {
  ordered_json body = ordered_json::object();
  body["code"] = code;
  body["message"] = message;
  body["path"] = path;
  return {status, kJson, body.dump() + "\n"};
}

ApiResponse Json(const ordered_json& value) { return {200, kJson, value.dump(2) + "\n"}; }

// Runs `fn`, turning library errors into {code, message, path} bodies.
template <typename Fn>
ApiResponse Guard(Fn&& fn) {
  try {
    return fn();
  } catch (const Error& e) {
    return ErrorResponse(StatusFor(e.code()), ErrorCodeName(e.code()), e.what(), e.path());
  } catch (const std::exception& e) {
    return ErrorResponse(500, "InternalError", e.what(), "");
  }
}

}  // namespace

ApiResponse HandleMethods(const ServeOptions& options) {
  return Guard([&] {
    ordered_json methods = ordered_json::array();
    for (const auto& m : BundledMethods()) {
      ordered_json item = ordered_json::object();
      item["id"] = m.id;
      item["source"] = "bundled";
      item["entry"] = EntryToJson(ParseEntryFile(m.text));
      methods.push_back(std::move(item));
    }
    ordered_json warnings = ordered_json::array();
    if (!options.cache_root.empty()) {
      sync::Cache cache(options.cache_root);
      std::vector<std::string> list_warnings;
      for (const auto& row : sync::ListCached(cache, &list_warnings)) {
        const auto bytes = cache.Load(row.id, row.sha256);
        if (!bytes) continue;
        ordered_json item = ordered_json::object();
        item["id"] = row.id;
        item["source"] = "cache";
        item["fetched_at"] = row.fetched_at;
        item["entry"] = EntryToJson(ParseEntryFile(*bytes));
        methods.push_back(std::move(item));
      }
      for (auto& w : list_warnings) warnings.push_back(std::move(w));
    }
    ordered_json body = ordered_json::object();
    body["methods"] = std::move(methods);
    body["warnings"] = std::move(warnings);
    return Json(body);
  });
}

ApiResponse HandleTooltips() {
  return Guard([] { return Json(TooltipsToJson()); });
}

ApiResponse HandleValidate(std::string_view body) {
  return Guard([&] {
    const auto doc = nlohmann::json::parse(body, nullptr, false);
    if (doc.is_discarded()) throw Error(ErrorCode::kSyntax, "request body is not valid JSON");
    return Json(ValidateDocument(doc).ToJson());
  });
}

ApiResponse HandleRender(std::string_view body) {
  return Guard([&] {
    const CompassDocument doc = ParseDocument(body);
    return ApiResponse{200, "image/svg+xml", render::RenderSvg(render::Layout(doc))};
  });
}

ApiResponse HandleExportTex(std::string_view body) {
  return Guard([&] {
    const CompassDocument doc = ParseDocument(body);
    return ApiResponse{200, "text/plain; charset=utf-8", render::RenderTikz(doc)};
  });
}

ApiResponse HandleMetrics(std::string_view body) {
  return Guard([&] {
    const MetricsReport report = ComputeReport(ParseExperimentLog(body));
    ordered_json out = ordered_json::object();
    out["values"] = report.ToJson();
    out["warnings"] = report.warnings;
    return Json(out);
  });
}

struct Server::Impl {
  ServeOptions options;
  httplib::Server http;
};

Server::Server(ServeOptions options) : impl_(std::make_unique<Impl>()) {
  impl_->options = std::move(options);
  auto reply = [](httplib::Response& res, const ApiResponse& api) {
    res.status = api.status;
    res.set_content(api.body, api.content_type);
  };
  Impl* impl = impl_.get();
  impl->http.set_payload_max_length(kMaxRequestBytes);
  impl->http.Get("/api/methods", [impl, reply](const httplib::Request&, httplib::Response& res) {
    reply(res, HandleMethods(impl->options));
  });
  impl->http.Get("/api/tooltips", [reply](const httplib::Request&, httplib::Response& res) {
    reply(res, HandleTooltips());
  });
  impl->http.Post("/api/validate", [reply](const httplib::Request& req, httplib::Response& res) {
    reply(res, HandleValidate(req.body));
  });
  impl->http.Post("/api/render", [reply](const httplib::Request& req, httplib::Response& res) {
    reply(res, HandleRender(req.body));
  });
  impl->http.Post("/api/export-tex", [reply](const httplib::Request& req, httplib::Response& res) {
    reply(res, HandleExportTex(req.body));
  });
  impl->http.Post("/api/metrics", [reply](const httplib::Request& req, httplib::Response& res) {
    reply(res, HandleMetrics(req.body));
  });
  impl->http.set_error_handler([](const httplib::Request&, httplib::Response& res) {
    if (!res.body.empty()) return;
    const ApiResponse api = ErrorResponse(res.status, res.status == 404 ? "NotFound" : "HttpError",
                                          httplib::status_message(res.status), "");
    res.set_content(api.body, api.content_type);
  });
}

Server::~Server() { Stop(); }

int Server::Bind(const std::string& host, int port) {
  if (port == 0) return impl_->http.bind_to_any_port(host);
  return impl_->http.bind_to_port(host, port) ? port : -1;
}

bool Server::Listen() { return impl_->http.listen_after_bind(); }

void Server::Stop() {
  if (impl_) impl_->http.stop();
}

}  // namespace cleva::serve
