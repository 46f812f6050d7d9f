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

#ifndef CLEVA_BUNDLED_HPP_
#define CLEVA_BUNDLED_HPP_

#include <span>
#include <string_view>

#include "cleva/descriptor.hpp"

namespace cleva {

// Descriptor files compiled into the binary from fixtures/.
struct BundledMethod {
  std::string_view id;
  std::string_view text;  // single-entry file
};

// OSAKA, FedWeIT, A-GEM, VCL, OCDVAE (legend order).
std::span<const BundledMethod> BundledMethods();

// The five bundled entries as one document.
CompassDocument BundledDocument();

}  // namespace cleva

#endif  // CLEVA_BUNDLED_HPP_
