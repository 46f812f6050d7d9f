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

#ifndef CLEVA_DESCRIPTOR_HPP_
#define CLEVA_DESCRIPTOR_HPP_

// Compass descriptors: one CompassEntry per method, grouped into a
// CompassDocument of at most six entries. Every entry carries a total
// assignment over the 11 inner dimensions (tri-state supervision) and the 15
// outer measures (reported or not).

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace cleva {

// Canonical order, clockwise from the six o'clock position of the compass.
enum class InnerDimension : std::uint8_t {
  kTaskAgnostic,
  kTaskOrderDiscovery,
  kActiveDataQuery,
  kMultipleModalities,
  kOpenWorld,
  kOnline,
  kFederated,
  kMultipleModels,
  kUncertainty,
  kGenerative,
  kEpisodicMemory,
};

inline constexpr std::size_t kInnerDimensionCount = 11;

inline constexpr std::array<InnerDimension, kInnerDimensionCount> kInnerDimensions = {
    InnerDimension::kTaskAgnostic,       InnerDimension::kTaskOrderDiscovery,
    InnerDimension::kActiveDataQuery,    InnerDimension::kMultipleModalities,
    InnerDimension::kOpenWorld,          InnerDimension::kOnline,
    InnerDimension::kFederated,          InnerDimension::kMultipleModels,
    InnerDimension::kUncertainty,        InnerDimension::kGenerative,
    InnerDimension::kEpisodicMemory,
};

// Measures that can be reported on the outer ring, in display order.
enum class OuterMeasure : std::uint8_t {
  kDataPerTask,
  kTaskOrder,
  kPerTaskMetrics,
  kOptimizationSteps,
  kGeneratedData,
  kStoredData,
  kParameters,
  kMemory,
  kComputeTime,
  kMacOperations,
  kCommunication,
  kForgetting,
  kForwardTransfer,
  kBackwardTransfer,
  kOpenness,
};

inline constexpr std::size_t kOuterMeasureCount = 15;

inline constexpr std::array<OuterMeasure, kOuterMeasureCount> kOuterMeasures = {
    OuterMeasure::kDataPerTask,      OuterMeasure::kTaskOrder,
    OuterMeasure::kPerTaskMetrics,   OuterMeasure::kOptimizationSteps,
    OuterMeasure::kGeneratedData,    OuterMeasure::kStoredData,
    OuterMeasure::kParameters,       OuterMeasure::kMemory,
    OuterMeasure::kComputeTime,      OuterMeasure::kMacOperations,
    OuterMeasure::kCommunication,    OuterMeasure::kForgetting,
    OuterMeasure::kForwardTransfer,  OuterMeasure::kBackwardTransfer,
    OuterMeasure::kOpenness,
};

// "supervised" is drawn on the inner marking circle, "unsupervised" on the
// outer one.
enum class SupervisionMark : std::uint8_t { kNone, kSupervised, kUnsupervised };

inline constexpr std::array<SupervisionMark, 3> kSupervisionMarks = {
    SupervisionMark::kNone, SupervisionMark::kSupervised,
    SupervisionMark::kUnsupervised};

// Whether a mark is backed by the method's published description.
enum class Provenance : std::uint8_t { kAttested, kUnattested, kPartial };

inline constexpr std::string_view kFormatVersion = "1";
inline constexpr std::size_t kMaxEntries = 6;
inline constexpr int kPaletteSize = 6;
inline constexpr std::size_t kMaxLabelLength = 200;

constexpr std::size_t Index(InnerDimension d) { return static_cast<std::size_t>(d); }
constexpr std::size_t Index(OuterMeasure m) { return static_cast<std::size_t>(m); }

std::string_view Key(InnerDimension d);
std::string_view Key(OuterMeasure m);
std::string_view Key(SupervisionMark mark);
std::string_view Key(Provenance p);

std::string_view DisplayName(InnerDimension d);
std::string_view DisplayName(OuterMeasure m);

std::optional<InnerDimension> ParseInnerDimension(std::string_view key);
std::optional<OuterMeasure> ParseOuterMeasure(std::string_view key);
std::optional<SupervisionMark> ParseSupervisionMark(std::string_view key);
std::optional<Provenance> ParseProvenance(std::string_view key);

// Number of Unicode code points in a UTF-8 string.
std::size_t Utf8Length(std::string_view text);

struct CompassEntry {
  std::string label;
  int color_slot = 0;
  std::array<SupervisionMark, kInnerDimensionCount> inner{};
  std::array<bool, kOuterMeasureCount> outer{};
  // Optional metadata keyed by field path ("inner.online", "outer.memory").
  std::map<std::string, Provenance> provenance;

  SupervisionMark& mark(InnerDimension d) { return inner[Index(d)]; }
  SupervisionMark mark(InnerDimension d) const { return inner[Index(d)]; }
  bool reports(OuterMeasure m) const { return outer[Index(m)]; }
  void set_reports(OuterMeasure m, bool value) { outer[Index(m)] = value; }

  // Checked construction; throws Error(kSchema) when an invariant fails.
  static CompassEntry Make(std::string label, int color_slot,
                           std::array<SupervisionMark, kInnerDimensionCount> inner,
                           std::array<bool, kOuterMeasureCount> outer);

  friend bool operator==(const CompassEntry&, const CompassEntry&) = default;
};

struct CompassDocument {
  std::string version{kFormatVersion};
  std::vector<CompassEntry> entries;

  friend bool operator==(const CompassDocument&, const CompassDocument&) = default;
};

struct Violation {
  std::string path;
  std::string message;

  friend bool operator==(const Violation&, const Violation&) = default;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  nlohmann::ordered_json ToJson() const;
};

ValidationReport ValidateEntry(const CompassEntry& entry);
ValidationReport ValidateDocument(const CompassDocument& doc);

// Structural validation of raw JSON. Unknown fields are violations unless
// `lenient`, in which case they are appended to `warnings` (when non-null).
// Paths are relative to the value passed in.
ValidationReport ValidateEntry(const nlohmann::json& entry, bool lenient = false,
                               std::vector<std::string>* warnings = nullptr);
ValidationReport ValidateDocument(const nlohmann::json& doc, bool lenient = false,
                                  std::vector<std::string>* warnings = nullptr);

struct ParseOptions {
  bool lenient = false;
};

// Accepts full documents and single-entry files (an entry object carrying a
// "version" field). Throws Error with kSyntax, kSchema or kVersion.
CompassDocument ParseDocument(std::string_view text, const ParseOptions& options = {},
                              std::vector<std::string>* warnings = nullptr);

// Single-entry file only.
CompassEntry ParseEntryFile(std::string_view text, const ParseOptions& options = {},
                            std::vector<std::string>* warnings = nullptr);

nlohmann::ordered_json EntryToJson(const CompassEntry& entry);
nlohmann::ordered_json DocumentToJson(const CompassDocument& doc);

// Canonical text: schema key order, 2-space indent, trailing newline.
std::string SerializeDocument(const CompassDocument& doc);
std::string SerializeEntryFile(const CompassEntry& entry);

struct DiffItem {
  std::string path;
  std::string a;
  std::string b;

  friend bool operator==(const DiffItem&, const DiffItem&) = default;
};

// Field-level differences over inner and outer marks; label, color slot and
// provenance metadata are ignored.
std::vector<DiffItem> DiffEntries(const CompassEntry& a, const CompassEntry& b);

}  // namespace cleva

#endif  // CLEVA_DESCRIPTOR_HPP_
