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

#ifndef CLEVA_SRC_RENDER_UTIL_HPP_
#define CLEVA_SRC_RENDER_UTIL_HPP_

#include <cmath>
#include <numbers>
#include <string>

#include <fmt/format.h>

namespace cleva::render::internal {

// Fixed 4-decimal formatting; "-0.0000" is normalized to "0.0000".
inline std::string Num(double v) {
  std::string s = fmt::format("{:.4f}", v);
  if (s == "-0.0000") s = "0.0000";
  return s;
}

inline double Radians(double degrees) { return degrees * std::numbers::pi / 180.0; }

}  // namespace cleva::render::internal

#endif  // CLEVA_SRC_RENDER_UTIL_HPP_
