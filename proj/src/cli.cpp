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

#include "cleva/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include <fmt/format.h>
#include "json.hpp"

#include "cleva/descriptor.hpp"
#include "cleva/error.hpp"
#include "cleva/experiment_log.hpp"
#include "cleva/render.hpp"
#include "cleva/repo_sync.hpp"
#include "cleva/serve.hpp"

namespace cleva::cli {
namespace {

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw Error(ErrorCode::kIo, "read failed: " + path);
  return buf.str();
}

void WriteArtifact(const Command& command, const std::string& bytes, std::ostream& out) {
  if (!command.output) {
    out << bytes;
    return;
  }
  std::ofstream file(*command.output, std::ios::binary | std::ios::trunc);
  if (!file) throw Error(ErrorCode::kIo, "cannot write " + *command.output);
  file << bytes;
  file.close();
  if (!file) throw Error(ErrorCode::kIo, "write failed: " + *command.output);
}

int ExitCodeFor(ErrorCode code) {
  switch (code) {
    case ErrorCode::kIo:
      return kExitIo;
    case ErrorCode::kNetwork:
      return kExitNetwork;
    default:
      return kExitValidation;
  }
}

int RunValidate(const Command& command, std::ostream& err) {
  const std::string text = ReadFile(command.input);
  const auto doc = nlohmann::json::parse(text, nullptr, false);
  if (doc.is_discarded()) throw Error(ErrorCode::kSyntax, "malformed JSON in " + command.input);
  std::vector<std::string> warnings;
  const ValidationReport report = ValidateDocument(doc, command.lenient, &warnings);
  for (const auto& w : warnings) err << "warning: " << w << '\n';
  if (report.ok()) {
    err << "OK\n";
    return kExitOk;
  }
  for (const auto& v : report.violations) {
    err << (v.path.empty() ? std::string("<root>") : v.path) << ": " << v.message << '\n';
  }
  return kExitValidation;
}

CompassDocument LoadDocument(const Command& command, const std::string& path, std::ostream& err) {
  std::vector<std::string> warnings;
  CompassDocument doc = ParseDocument(ReadFile(path), ParseOptions{command.lenient}, &warnings);
  for (const auto& w : warnings) err << "warning: " << w << '\n';
  return doc;
}

int RunRender(const Command& command, std::ostream& out, std::ostream& err) {
  const CompassDocument doc = LoadDocument(command, command.input, err);
  const std::string bytes = command.format == RenderFormat::kSvg
                                ? render::RenderSvg(render::Layout(doc))
                                : render::RenderTikz(doc);
  WriteArtifact(command, bytes, out);
  return kExitOk;
}

int RunMetrics(const Command& command, std::ostream& out, std::ostream& err) {
  ExperimentLog log =
      ParseExperimentLog(ReadFile(command.input), LogParseOptions{command.truncate_ragged});
  if (command.beta) log.lca_beta = command.beta;
  const MetricsReport report = ComputeReport(log, ReportOptions{command.select});
  for (const auto& w : report.warnings) err << "warning: " << w << '\n';
  WriteArtifact(command, report.ToJson().dump(2) + "\n", out);
  return kExitOk;
}

void PrintCached(const std::vector<sync::CachedMethod>& rows, std::ostream& out) {
  for (const auto& row : rows) out << row.id << '\t' << row.label << '\t' << row.fetched_at << '\n';
}

int RunFetch(const Command& command, std::ostream& out, std::ostream& err) {
  sync::Cache cache(command.cache_dir);
  std::vector<std::string> warnings;
  if (command.offline) {
    PrintCached(sync::ListCached(cache, &warnings), out);
    for (const auto& w : warnings) err << "warning: " << w << '\n';
    return kExitOk;
  }
  sync::HttpTransport transport;
  const sync::Manifest manifest = sync::FetchManifest(command.repo, transport, &cache);
  for (const auto& method : manifest.methods) {
    const CompassEntry entry = sync::DownloadMethod(manifest, method.id, cache, transport);
    out << method.id << '\t' << entry.label << '\n';
  }
  return kExitOk;
}

int RunList(const Command& command, std::ostream& out, std::ostream& err) {
  sync::Cache cache(command.cache_dir);
  std::vector<std::string> warnings;
  PrintCached(sync::ListCached(cache, &warnings), out);
  for (const auto& w : warnings) err << "warning: " << w << '\n';
  return kExitOk;
}

const CompassEntry& PickEntry(const CompassDocument& doc, std::size_t index,
                              const std::string& path) {
  if (index >= doc.entries.size()) {
    throw Error(ErrorCode::kIndexOutOfRange,
                fmt::format("{} has {} entries; index {} requested", path, doc.entries.size(),
                            index));
  }
  return doc.entries[index];
}

int RunDiff(const Command& command, std::ostream& out, std::ostream& err) {
  const CompassDocument a = LoadDocument(command, command.input, err);
  const CompassDocument b = LoadDocument(command, command.second_input, err);
  const auto items =
      DiffEntries(PickEntry(a, command.a_index, command.input),
                  PickEntry(b, command.b_index, command.second_input));
  std::string text;
  for (const auto& item : items) text += fmt::format("{}: {} -> {}\n", item.path, item.a, item.b);
  WriteArtifact(command, text, out);
  return kExitOk;
}

int RunServe(const Command& command, std::ostream& err) {
  serve::Server server(serve::ServeOptions{command.cache_dir});
  const int port = server.Bind(command.bind, command.port);
  if (port < 0) {
    throw Error(ErrorCode::kIo, fmt::format("cannot bind {}:{}", command.bind, command.port));
  }
  err << fmt::format("listening on http://{}:{}", command.bind, port) << std::endl;
  return server.Listen() ? kExitOk : kExitIo;
}

}  // namespace

Config ParseConfig(const std::string& text) {
  const auto j = nlohmann::json::parse(text, nullptr, false);
  if (j.is_discarded()) throw Error(ErrorCode::kSyntax, "malformed config file");
  if (!j.is_object()) throw Error(ErrorCode::kSchema, "config must be a JSON object");
  Config config;
  for (const auto& [key, value] : j.items()) {
    if (key == "port") {
      if (!value.is_number_integer() || value.get<int>() < 0 || value.get<int>() > 65535) {
        throw Error(ErrorCode::kSchema, "port must be an integer in [0, 65535]", key);
      }
      config.port = value.get<int>();
      continue;
    }
    std::optional<std::string>* slot = key == "cache_dir" ? &config.cache_dir
                                       : key == "repo"    ? &config.repo
                                       : key == "bind"    ? &config.bind
                                                          : nullptr;
    if (slot == nullptr) throw Error(ErrorCode::kSchema, "unknown config key", key);
    if (!value.is_string()) throw Error(ErrorCode::kSchema, "must be a string", key);
    *slot = value.get<std::string>();
  }
  return config;
}

Config LoadConfigFromEnv() {
  const char* path = std::getenv("CLEVA_CONFIG");
  if (path == nullptr || *path == '\0') return {};
  return ParseConfig(ReadFile(path));
}

Command ParseArgs(std::span<const std::string> args, const Config& config) {
  Command cmd;
  if (config.cache_dir) cmd.cache_dir = *config.cache_dir;
  if (config.repo) cmd.repo = *config.repo;
  if (config.bind) cmd.bind = *config.bind;
  if (config.port) cmd.port = *config.port;

  CLI::App app{"Build, render and sync CLEVA-Compass descriptors.", "cleva"};
  app.require_subcommand(1);

  std::string format = "svg";
  std::optional<std::string> output;

  auto* validate = app.add_subcommand("validate", "Check a document against the schema");
  validate->add_option("doc", cmd.input, "Document or single-entry file")->required();
  validate->add_flag("--lenient", cmd.lenient, "Report unknown fields as warnings");

  auto* render = app.add_subcommand("render", "Render a document as SVG or TikZ");
  render->add_option("doc", cmd.input, "Document or single-entry file")->required();
  render->add_option("--format", format, "svg or tikz")->check(CLI::IsMember({"svg", "tikz"}));
  render->add_option("-o,--output", output, "Output path");
  render->add_flag("--lenient", cmd.lenient, "Report unknown fields as warnings");

  auto* export_tex = app.add_subcommand("export-tex", "Write the TikZ fragment");
  export_tex->add_option("doc", cmd.input, "Document or single-entry file")->required();
  export_tex->add_option("-o,--output", output, "Output path");
  export_tex->add_flag("--lenient", cmd.lenient, "Report unknown fields as warnings");

  auto* metrics = app.add_subcommand("metrics", "Compute metrics from an experiment log");
  metrics->add_option("log", cmd.input, "Experiment log (JSON)")->required();
  metrics->add_option("--select", cmd.select, "Comma-separated report keys")->delimiter(',');
  metrics->add_option("--beta", cmd.beta, "Batch index for LCA");
  metrics->add_flag("--truncate-ragged", cmd.truncate_ragged,
                    "Cut ragged per-batch curves to the shortest task");
  metrics->add_option("-o,--output", output, "Output path");

  auto* fetch = app.add_subcommand("fetch", "Download methods from a repository");
  fetch->add_option("--repo", cmd.repo, "Repository base URL");
  fetch->add_flag("--offline", cmd.offline, "Use cached entries only");
  fetch->add_option("--cache-dir", cmd.cache_dir, "Cache directory");

  auto* list = app.add_subcommand("list", "List cached methods");
  list->add_option("--cache-dir", cmd.cache_dir, "Cache directory");

  auto* diff = app.add_subcommand("diff", "Field-level differences between two entries");
  diff->add_option("a", cmd.input, "First document")->required();
  diff->add_option("b", cmd.second_input, "Second document")->required();
  diff->add_option("--a-index", cmd.a_index, "Entry index in the first document");
  diff->add_option("--b-index", cmd.b_index, "Entry index in the second document");
  diff->add_flag("--lenient", cmd.lenient, "Report unknown fields as warnings");

  auto* serve = app.add_subcommand("serve", "Serve the local HTTP API");
  serve->add_option("--port", cmd.port, "Port (0 picks a free one)")->check(CLI::Range(0, 65535));
  serve->add_option("--bind", cmd.bind, "Bind address");
  serve->add_option("--cache-dir", cmd.cache_dir, "Cache directory");

  if (!args.empty() && !args.front().empty() && args.front()[0] != '-' &&
      app.get_subcommand_no_throw(args.front()) == nullptr) {
    throw Error(ErrorCode::kUsage, "unknown verb '" + args.front() + "'\n\n" + app.help());
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    const auto subs = app.get_subcommands();
    cmd.help = subs.empty() ? app.help() : subs.front()->help();
    return cmd;
  } catch (const CLI::ParseError& e) {
    const auto subs = app.get_subcommands();
    const std::string help = subs.empty() ? app.help() : subs.front()->help();
    throw Error(ErrorCode::kUsage, std::string(e.what()) + "\n\n" + help);
  }

  const CLI::App* chosen = app.get_subcommands().front();
  const std::string name = chosen->get_name();
  if (name == "validate") {
    cmd.verb = Verb::kValidate;
  } else if (name == "render" || name == "export-tex") {
    cmd.verb = name == "render" ? Verb::kRender : Verb::kExportTex;
    cmd.format = (name == "export-tex" || format == "tikz") ? RenderFormat::kTikz
                                                            : RenderFormat::kSvg;
    if (cmd.format == RenderFormat::kSvg && !output) {
      throw Error(ErrorCode::kUsage, "svg output requires -o PATH\n\n" + render->help());
    }
  } else if (name == "metrics") {
    cmd.verb = Verb::kMetrics;
  } else if (name == "fetch") {
    cmd.verb = Verb::kFetch;
    if (!cmd.offline && cmd.repo.empty()) {
      throw Error(ErrorCode::kUsage, "--repo is required (or set repo in the config file)\n\n" +
                                         fetch->help());
    }
  } else if (name == "list") {
    cmd.verb = Verb::kList;
  } else if (name == "diff") {
    cmd.verb = Verb::kDiff;
  } else {
    cmd.verb = Verb::kServe;
  }
  cmd.output = output;
  if (cmd.cache_dir.empty()) cmd.cache_dir = sync::Cache::DefaultRoot().string();
  return cmd;
}

int Execute(const Command& command, std::ostream& out, std::ostream& err) {
  if (!command.help.empty()) {
    out << command.help;
    return kExitOk;
  }
  try {
    switch (command.verb) {
      case Verb::kValidate:
        return RunValidate(command, err);
      case Verb::kRender:
      case Verb::kExportTex:
        return RunRender(command, out, err);
      case Verb::kMetrics:
        return RunMetrics(command, out, err);
      case Verb::kFetch:
        return RunFetch(command, out, err);
      case Verb::kList:
        return RunList(command, out, err);
      case Verb::kDiff:
        return RunDiff(command, out, err);
      case Verb::kServe:
        return RunServe(command, err);
    }
  } catch (const Error& e) {
    err << "error: " << ErrorCodeName(e.code()) << ": " << e.what();
    if (!e.path().empty()) err << " (at " << e.path() << ")";
    err << '\n';
    return ExitCodeFor(e.code());
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: IoError: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  }
  return kExitValidation;
}

int Main(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  Command command;
  try {
    command = ParseArgs(args, LoadConfigFromEnv());
  } catch (const Error& e) {
    err << "error: " << ErrorCodeName(e.code()) << ": " << e.what() << '\n';
    return ExitCodeFor(e.code());
  }
  return Execute(command, out, err);
}

}  // namespace cleva::cli
