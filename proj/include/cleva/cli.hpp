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

#ifndef CLEVA_CLI_HPP_
#define CLEVA_CLI_HPP_

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace cleva::cli {

// Process exit codes.
enum ExitCode : int {
  kExitOk = 0,
  kExitValidation = 1,  // schema, validation, metric-input and usage errors
  kExitIo = 2,
  kExitNetwork = 3,
};

enum class Verb { kValidate, kRender, kExportTex, kMetrics, kFetch, kList, kDiff, kServe };
enum class RenderFormat { kSvg, kTikz };

// Values from the file named by $CLEVA_CONFIG. Flags override these.
struct Config {
  std::optional<std::string> cache_dir;
  std::optional<std::string> repo;
  std::optional<std::string> bind;
  std::optional<int> port;
};

// Reads $CLEVA_CONFIG when set; throws Error(kIo) or Error(kSchema).
Config LoadConfigFromEnv();
Config ParseConfig(const std::string& text);

struct Command {
  Verb verb = Verb::kValidate;
  std::string input;         // document, log, or first diff operand
  std::string second_input;  // second diff operand
  RenderFormat format = RenderFormat::kSvg;
  std::optional<std::string> output;
  bool lenient = false;
  std::vector<std::string> select;
  bool truncate_ragged = false;
  std::optional<std::size_t> beta;
  std::string repo;
  bool offline = false;
  std::string cache_dir;
  std::size_t a_index = 0;
  std::size_t b_index = 0;
  int port = 8080;
  std::string bind = "127.0.0.1";
  // Set when --help was requested; Execute prints it and succeeds.
  std::string help;
};

// argv without the program name. Throws Error(kUsage) with help text.
Command ParseArgs(std::span<const std::string> args, const Config& config = {});

// Artifacts go to `out` (or the -o path), diagnostics to `err`.
int Execute(const Command& command, std::ostream& out, std::ostream& err);

// Full entry point: config, parsing, execution, error-to-exit-code mapping.
int Main(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace cleva::cli

#endif  // CLEVA_CLI_HPP_
