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

#ifndef CLEVA_TESTS_SVG_SCAN_HPP_
#define CLEVA_TESTS_SVG_SCAN_HPP_

// Small scanners for checking generated SVG and TikZ text without a full
// XML or TeX toolchain.

#include <regex>
#include <string>
#include <vector>

namespace testing_support {

inline std::size_t Count(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) {
    ++n;
  }
  return n;
}

// Tag balance for the XML subset the renderer emits: declaration, comments,
// open/close/self-closing elements, quoted attributes. Returns an empty
// string when well formed, otherwise a description of the first problem.
inline std::string CheckXml(const std::string& xml) {
  std::vector<std::string> stack;
  std::size_t i = 0;
  bool root_seen = false;
  while ((i = xml.find('<', i)) != std::string::npos) {
    if (xml.compare(i, 4, "<!--") == 0) {
      const auto end = xml.find("-->", i + 4);
      if (end == std::string::npos) return "unterminated comment";
      i = end + 3;
      continue;
    }
    if (xml.compare(i, 2, "<?") == 0) {
      const auto end = xml.find("?>", i);
      if (end == std::string::npos) return "unterminated declaration";
      i = end + 2;
      continue;
    }
    // Find the closing '>' outside quotes.
    std::size_t j = i + 1;
    char quote = 0;
    for (; j < xml.size(); ++j) {
      const char c = xml[j];
      if (quote) {
        if (c == quote) quote = 0;
        if (c == '<') return "raw '<' inside attribute";
      } else if (c == '"' || c == '\'') {
        quote = c;
      } else if (c == '>') {
        break;
      }
    }
    if (j >= xml.size()) return "unterminated tag";
    std::string tag = xml.substr(i + 1, j - i - 1);
    const bool closing = !tag.empty() && tag[0] == '/';
    const bool self_closing = !tag.empty() && tag.back() == '/';
    std::string name = tag.substr(closing ? 1 : 0);
    name = name.substr(0, name.find_first_of(" \t\n/"));
    if (closing) {
      if (stack.empty() || stack.back() != name) return "mismatched </" + name + ">";
      stack.pop_back();
    } else if (!self_closing) {
      if (stack.empty() && root_seen) return "second root element";
      root_seen = true;
      stack.push_back(name);
    }
    i = j + 1;
  }
  if (!stack.empty()) return "unclosed <" + stack.back() + ">";
  if (!root_seen) return "no root element";
  // Every '&' outside tags must start an entity.
  static const std::regex bad_amp("&(?!(amp|lt|gt|quot|apos|#[0-9]+|#x[0-9a-fA-F]+);)");
  if (std::regex_search(xml, bad_amp)) return "bare '&'";
  return {};
}

// Values of `attr` on every element whose start tag contains `marker`.
inline std::vector<std::string> AttributeValues(const std::string& xml, const std::string& marker,
                                                const std::string& attr) {
  std::vector<std::string> out;
  const std::regex value(attr + "=\"([^\"]*)\"");
  for (auto pos = xml.find(marker); pos != std::string::npos; pos = xml.find(marker, pos + 1)) {
    const auto start = xml.rfind('<', pos);
    const auto end = xml.find('>', pos);
    const std::string tag = xml.substr(start, end - start);
    std::smatch m;
    if (std::regex_search(tag, m, value)) out.push_back(m[1]);
  }
  return out;
}

// \begin{x}/\end{x} nesting and brace balance outside comments and escapes.
inline std::string CheckTex(const std::string& tex) {
  std::vector<std::string> envs;
  static const std::regex env(R"(\\(begin|end)\{([^}]*)\})");
  int braces = 0;
  int groups = 0;
  std::size_t line_start = 0;
  while (line_start < tex.size()) {
    auto line_end = tex.find('\n', line_start);
    if (line_end == std::string::npos) line_end = tex.size();
    std::string line = tex.substr(line_start, line_end - line_start);
    // Strip an unescaped '%' comment.
    for (std::size_t k = 0; k < line.size(); ++k) {
      if (line[k] == '\\') {
        ++k;
        continue;
      }
      if (line[k] == '%') {
        line.resize(k);
        break;
      }
    }
    for (std::size_t k = 0; k < line.size(); ++k) {
      if (line[k] == '\\') {
        ++k;
        continue;
      }
      if (line[k] == '{') ++braces;
      if (line[k] == '}' && --braces < 0) return "unbalanced '}'";
    }
    for (std::sregex_iterator it(line.begin(), line.end(), env), end; it != end; ++it) {
      if ((*it)[1] == "begin") {
        envs.push_back((*it)[2]);
      } else {
        if (envs.empty() || envs.back() != (*it)[2]) return "mismatched \\end{" + std::string((*it)[2]) + "}";
        envs.pop_back();
      }
    }
    groups += static_cast<int>(Count(line, "\\begingroup")) - static_cast<int>(Count(line, "\\endgroup"));
    if (groups < 0) return "\\endgroup without \\begingroup";
    line_start = line_end + 1;
  }
  if (braces != 0) return "unbalanced braces";
  if (!envs.empty()) return "unclosed environment " + envs.back();
  if (groups != 0) return "unbalanced \\begingroup";
  return {};
}

}  // namespace testing_support

#endif  // CLEVA_TESTS_SVG_SCAN_HPP_
