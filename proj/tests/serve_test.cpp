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

#include <gtest/gtest.h>

#include <thread>

#include "httplib.h"
#include "json.hpp"

#include "cleva/bundled.hpp"
#include "cleva/descriptor.hpp"
#include "cleva/serve.hpp"

namespace cleva::serve {
namespace {

using nlohmann::json;

std::string FiveMethods() { return SerializeDocument(BundledDocument()); }

TEST(Handlers, Methods) {
  const ApiResponse r = HandleMethods(ServeOptions{});
  ASSERT_EQ(r.status, 200);
  const json body = json::parse(r.body);
  ASSERT_EQ(body["methods"].size(), 5u);
  EXPECT_EQ(body["methods"][0]["id"], "osaka-caccia-2020");
  EXPECT_EQ(body["methods"][0]["source"], "bundled");
  EXPECT_EQ(body["methods"][0]["entry"]["label"], "OSAKA (Caccia et al., 2020)");
}

TEST(Handlers, ValidateReportsViolations) {
  ApiResponse r = HandleValidate(FiveMethods());
  ASSERT_EQ(r.status, 200);
  EXPECT_TRUE(json::parse(r.body)["valid"].get<bool>());

  json doc = json::parse(FiveMethods());
  doc["entries"][2]["inner"]["online"] = "often";
  r = HandleValidate(doc.dump());
  ASSERT_EQ(r.status, 200);
  const json report = json::parse(r.body);
  EXPECT_FALSE(report["valid"].get<bool>());
  EXPECT_EQ(report["violations"][0]["path"], "entries[2].inner.online");

  r = HandleValidate("{oops");
  EXPECT_EQ(r.status, 400);
  EXPECT_EQ(json::parse(r.body)["code"], "SyntaxError");
}

TEST(Handlers, RenderAndExport) {
  ApiResponse r = HandleRender(FiveMethods());
  ASSERT_EQ(r.status, 200);
  EXPECT_EQ(r.content_type, "image/svg+xml");
  EXPECT_EQ(r.body.rfind("<?xml", 0), 0u);

  r = HandleExportTex(FiveMethods());
  ASSERT_EQ(r.status, 200);
  EXPECT_NE(r.body.find("\\begin{tikzpicture}"), std::string::npos);

  json doc = json::parse(FiveMethods());
  doc["entries"][0]["color_slot"] = 9;
  r = HandleRender(doc.dump());
  EXPECT_EQ(r.status, 422);
  const json err = json::parse(r.body);
  EXPECT_EQ(err["code"], "SchemaError");
  EXPECT_EQ(err["path"], "entries[0].color_slot");
  EXPECT_FALSE(err["message"].get<std::string>().empty());
}

TEST(Handlers, TooltipsAndMetrics) {
  ApiResponse r = HandleTooltips();
  ASSERT_EQ(r.status, 200);
  EXPECT_EQ(json::parse(r.body)["outer"].size(), 15u);

  r = HandleMetrics(R"({"accuracy_matrix": [[0.9, null], [0.6, 0.8]]})");
  ASSERT_EQ(r.status, 200);
  const json report = json::parse(r.body);
  EXPECT_NEAR(report["values"]["forgetting"].get<double>(), 0.3, 1e-12);
  EXPECT_NEAR(report["values"]["backward_transfer"].get<double>(), -0.3, 1e-12);

  r = HandleMetrics(R"({"openness": {"n_train": 0, "n_test": 0, "n_target": 0}})");
  EXPECT_EQ(r.status, 422);
  EXPECT_EQ(json::parse(r.body)["code"], "InvalidCounts");
}

TEST(Server, EndpointsOverHttp) {
  Server server(ServeOptions{});
  const int port = server.Bind("127.0.0.1", 0);
  ASSERT_GT(port, 0);
  std::thread loop([&] { server.Listen(); });
  httplib::Client client("127.0.0.1", port);
  client.set_connection_timeout(std::chrono::seconds(5));
  httplib::Result res;
  for (int i = 0; i < 50 && !(res = client.Get("/api/tooltips")); ++i) {
    std::this_thread::sleep_for(std::chrono::milliseconds(20));
  }
  ASSERT_TRUE(res);
  EXPECT_EQ(res->status, 200);

  res = client.Get("/api/methods");
  ASSERT_TRUE(res);
  EXPECT_EQ(json::parse(res->body)["methods"].size(), 5u);

  res = client.Post("/api/render", FiveMethods(), "application/json");
  ASSERT_TRUE(res);
  EXPECT_EQ(res->status, 200);
  EXPECT_EQ(res->get_header_value("Content-Type"), "image/svg+xml");

  res = client.Post("/api/validate", "[", "application/json");
  ASSERT_TRUE(res);
  EXPECT_EQ(res->status, 400);

  res = client.Get("/api/unknown");
  ASSERT_TRUE(res);
  EXPECT_EQ(res->status, 404);
  EXPECT_EQ(json::parse(res->body)["code"], "NotFound");

  // Concurrent clients.
  std::vector<std::thread> clients;
  std::atomic<int> ok{0};
  for (int i = 0; i < 4; ++i) {
    clients.emplace_back([&] {
      httplib::Client c("127.0.0.1", port);
      for (int k = 0; k < 5; ++k) {
        auto r = c.Post("/api/export-tex", FiveMethods(), "application/json");
        if (r && r->status == 200) ++ok;
      }
    });
  }
  for (auto& t : clients) t.join();
  EXPECT_EQ(ok, 20);

  server.Stop();
  loop.join();
}

}  // namespace
}  // namespace cleva::serve
