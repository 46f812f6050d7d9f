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

#ifndef CLEVA_TOOLTIPS_HPP_
#define CLEVA_TOOLTIPS_HPP_

#include <string_view>

#include "cleva/descriptor.hpp"

namespace cleva {

// Hover text for the builder UI. Total over both enumerations.
std::string_view Tooltip(InnerDimension d);
std::string_view Tooltip(OuterMeasure m);

// {"inner": {key: text, ...}, "outer": {key: text, ...}} in canonical order.
nlohmann::ordered_json TooltipsToJson();

}  // namespace cleva

#endif  // CLEVA_TOOLTIPS_HPP_
