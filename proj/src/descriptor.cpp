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

#include "cleva/descriptor.hpp"

#include <set>
#include <utility>

#include "cleva/error.hpp"

namespace cleva {
namespace {

using nlohmann::json;
using nlohmann::ordered_json;

constexpr std::array<std::string_view, kInnerDimensionCount> kInnerKeys = {
    "task_agnostic", "task_order_discovery", "active_data_query",
    "multiple_modalities", "open_world", "online", "federated",
    "multiple_models", "uncertainty", "generative", "episodic_memory"};

constexpr std::array<std::string_view, kInnerDimensionCount> kInnerNames = {
    "Task Agnostic", "Task Order Discovery", "Active Data Query",
    "Multiple Modalities", "Open World", "Online", "Federated",
    "Multiple Models", "Uncertainty", "Generative", "Episodic Memory"};

constexpr std::array<std::string_view, kOuterMeasureCount> kOuterKeys = {
    "data_per_task", "task_order", "per_task_metrics", "optimization_steps",
    "generated_data", "stored_data", "parameters", "memory", "compute_time",
    "mac_operations", "communication", "forgetting", "forward_transfer",
    "backward_transfer", "openness"};

constexpr std::array<std::string_view, kOuterMeasureCount> kOuterNames = {
    "Data per task", "Task order", "Per task metrics", "Optimization steps",
    "Generated data", "Stored data", "Parameters", "Memory", "Compute time",
    "MAC operations", "Communication", "Forgetting", "Forward transfer",
    "Backward transfer", "Openness"};

constexpr std::array<std::string_view, 3> kMarkKeys = {"none", "supervised",
                                                       "unsupervised"};
constexpr std::array<std::string_view, 3> kProvenanceKeys = {"attested", "unattested",
                                                             "partial"};

template <typename Enum, std::size_t N>
std::optional<Enum> Lookup(const std::array<std::string_view, N>& keys,
                           std::string_view key) {
  for (std::size_t i = 0; i < N; ++i) {
    if (keys[i] == key) return static_cast<Enum>(i);
  }
  return std::nullopt;
}

std::string Join(std::string_view prefix, std::string_view field) {
  if (prefix.empty()) return std::string(field);
  std::string out(prefix);
  out += '.';
  out += field;
  return out;
}

bool IsValidFieldPath(std::string_view path) {
  if (path.starts_with("inner.")) return ParseInnerDimension(path.substr(6)).has_value();
  if (path.starts_with("outer.")) return ParseOuterMeasure(path.substr(6)).has_value();
  return false;
}

// Collects violations and unknown-field notes while walking raw JSON.
class Checker {
 public:
  Checker(bool lenient, std::vector<std::string>* warnings)
      : lenient_(lenient), warnings_(warnings) {}

  void Fail(std::string path, std::string message) {
    report_.violations.push_back({std::move(path), std::move(message)});
  }

  void Unknown(const std::string& path) {
    if (lenient_) {
      if (warnings_ != nullptr) warnings_->push_back("unknown field ignored: " + path);
    } else {
      Fail(path, "unknown field");
    }
  }

  void CheckEntry(const json& entry, const std::string& prefix, bool allow_version) {
    if (!entry.is_object()) {
      Fail(prefix, "entry must be an object");
      return;
    }
    CheckLabel(entry, prefix);
    CheckColorSlot(entry, prefix);
    CheckInner(entry, prefix);
    CheckOuter(entry, prefix);
    CheckProvenance(entry, prefix);
    for (const auto& [key, value] : entry.items()) {
      if (key == "label" || key == "color_slot" || key == "inner" || key == "outer" ||
          key == "provenance") {
        continue;
      }
      if (allow_version && key == "version") continue;
      Unknown(Join(prefix, key));
    }
  }

  void CheckVersion(const json& doc) {
    auto it = doc.find("version");
    if (it == doc.end()) {
      Fail("version", "missing required field");
    } else if (!it->is_string() || it->get<std::string>() != kFormatVersion) {
      Fail("version", "unsupported format version (expected \"1\")");
    }
  }

  ValidationReport Take() { return std::move(report_); }

 private:
  void CheckLabel(const json& entry, const std::string& prefix) {
    const std::string path = Join(prefix, "label");
    auto it = entry.find("label");
    if (it == entry.end()) return Fail(path, "missing required field");
    if (!it->is_string()) return Fail(path, "must be a string");
    const auto& label = it->get_ref<const std::string&>();
    if (label.empty()) return Fail(path, "must not be empty");
    if (Utf8Length(label) > kMaxLabelLength) {
      Fail(path, "longer than 200 characters");
    }
  }

  void CheckColorSlot(const json& entry, const std::string& prefix) {
    const std::string path = Join(prefix, "color_slot");
    auto it = entry.find("color_slot");
    if (it == entry.end()) return Fail(path, "missing required field");
    if (!it->is_number_integer()) return Fail(path, "must be an integer");
    const auto slot = it->get<std::int64_t>();
    if (slot < 0 || slot >= kPaletteSize) Fail(path, "must be in [0, 5]");
  }

  void CheckInner(const json& entry, const std::string& prefix) {
    const std::string path = Join(prefix, "inner");
    auto it = entry.find("inner");
    if (it == entry.end()) return Fail(path, "missing required field");
    if (!it->is_object()) return Fail(path, "must be an object");
    for (auto key : kInnerKeys) {
      const std::string field = Join(path, key);
      auto v = it->find(std::string(key));
      if (v == it->end()) {
        Fail(field, "missing inner dimension '" + std::string(key) + "'");
      } else if (!v->is_string() ||
                 !ParseSupervisionMark(v->get_ref<const std::string&>())) {
        Fail(field, "must be one of none, supervised, unsupervised");
      }
    }
    for (const auto& [key, value] : it->items()) {
      if (!ParseInnerDimension(key)) Unknown(Join(path, key));
    }
  }

  void CheckOuter(const json& entry, const std::string& prefix) {
    const std::string path = Join(prefix, "outer");
    auto it = entry.find("outer");
    if (it == entry.end()) return Fail(path, "missing required field");
    if (!it->is_object()) return Fail(path, "must be an object");
    for (auto key : kOuterKeys) {
      const std::string field = Join(path, key);
      auto v = it->find(std::string(key));
      if (v == it->end()) {
        Fail(field, "missing outer measure '" + std::string(key) + "'");
      } else if (!v->is_boolean()) {
        Fail(field, "must be a boolean");
      }
    }
    for (const auto& [key, value] : it->items()) {
      if (!ParseOuterMeasure(key)) Unknown(Join(path, key));
    }
  }

  void CheckProvenance(const json& entry, const std::string& prefix) {
    auto it = entry.find("provenance");
    if (it == entry.end()) return;
    const std::string path = Join(prefix, "provenance");
    if (!it->is_object()) return Fail(path, "must be an object");
    for (const auto& [key, value] : it->items()) {
      if (!IsValidFieldPath(key)) {
        Unknown(Join(path, key));
      } else if (!value.is_string() ||
                 !ParseProvenance(value.get_ref<const std::string&>())) {
        Fail(Join(path, key), "must be one of attested, unattested, partial");
      }
    }
  }

  bool lenient_;
  std::vector<std::string>* warnings_;
  ValidationReport report_;
};

std::string EntryPrefix(std::size_t i) { return "entries[" + std::to_string(i) + "]"; }

void CheckDocumentShape(Checker& checker, const json& doc) {
  auto it = doc.find("entries");
  if (it == doc.end()) return checker.Fail("entries", "missing required field");
  if (!it->is_array()) return checker.Fail("entries", "must be an array");
  if (it->size() > kMaxEntries) {
    checker.Fail("entries", "at most 6 entries are allowed (one per palette color)");
  }
  std::set<std::int64_t> seen;
  for (std::size_t i = 0; i < it->size(); ++i) {
    const json& entry = (*it)[i];
    checker.CheckEntry(entry, EntryPrefix(i), false);
    if (entry.is_object()) {
      auto slot = entry.find("color_slot");
      if (slot != entry.end() && slot->is_number_integer() &&
          !seen.insert(slot->get<std::int64_t>()).second) {
        checker.Fail(EntryPrefix(i) + ".color_slot", "duplicate color slot");
      }
    }
  }
}

CompassEntry EntryFromJson(const json& j) {
  CompassEntry entry;
  entry.label = j.at("label").get<std::string>();
  entry.color_slot = j.at("color_slot").get<int>();
  const json& inner = j.at("inner");
  for (auto d : kInnerDimensions) {
    entry.mark(d) = *ParseSupervisionMark(inner.at(std::string(Key(d))).get<std::string>());
  }
  const json& outer = j.at("outer");
  for (auto m : kOuterMeasures) {
    entry.set_reports(m, outer.at(std::string(Key(m))).get<bool>());
  }
  if (auto it = j.find("provenance"); it != j.end()) {
    for (const auto& [key, value] : it->items()) {
      if (!IsValidFieldPath(key)) continue;  // lenient mode dropped it
      entry.provenance.emplace(key, *ParseProvenance(value.get<std::string>()));
    }
  }
  return entry;
}

json ParseJson(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::kSyntax, e.what());
  }
}

void RequireObjectWithVersion(const json& doc) {
  if (!doc.is_object()) throw Error(ErrorCode::kSchema, "top level must be an object");
  auto it = doc.find("version");
  if (it == doc.end()) throw Error(ErrorCode::kSchema, "missing required field", "version");
  if (!it->is_string() || it->get<std::string>() != kFormatVersion) {
    throw Error(ErrorCode::kVersion, "unsupported format version: " + it->dump(),
                "version");
  }
}

[[noreturn]] void ThrowReport(const ValidationReport& report) {
  const Violation& first = report.violations.front();
  std::string message = first.path + ": " + first.message;
  if (report.violations.size() > 1) {
    message += " (and " + std::to_string(report.violations.size() - 1) + " more)";
  }
  throw Error(ErrorCode::kSchema, message, first.path);
}

bool IsSingleEntryFile(const json& doc) { return !doc.contains("entries") && doc.contains("label"); }

}  // namespace

std::string_view Key(InnerDimension d) { return kInnerKeys[Index(d)]; }
std::string_view Key(OuterMeasure m) { return kOuterKeys[Index(m)]; }
std::string_view Key(SupervisionMark mark) { return kMarkKeys[static_cast<std::size_t>(mark)]; }
std::string_view Key(Provenance p) { return kProvenanceKeys[static_cast<std::size_t>(p)]; }

std::string_view DisplayName(InnerDimension d) { return kInnerNames[Index(d)]; }
std::string_view DisplayName(OuterMeasure m) { return kOuterNames[Index(m)]; }

std::optional<InnerDimension> ParseInnerDimension(std::string_view key) {
  return Lookup<InnerDimension>(kInnerKeys, key);
}
std::optional<OuterMeasure> ParseOuterMeasure(std::string_view key) {
  return Lookup<OuterMeasure>(kOuterKeys, key);
}
std::optional<SupervisionMark> ParseSupervisionMark(std::string_view key) {
  return Lookup<SupervisionMark>(kMarkKeys, key);
}
std::optional<Provenance> ParseProvenance(std::string_view key) {
  return Lookup<Provenance>(kProvenanceKeys, key);
}

std::size_t Utf8Length(std::string_view text) {
  std::size_t n = 0;
  for (unsigned char c : text) {
    if ((c & 0xC0) != 0x80) ++n;
  }
  return n;
}

CompassEntry CompassEntry::Make(std::string label, int color_slot,
                                std::array<SupervisionMark, kInnerDimensionCount> inner,
                                std::array<bool, kOuterMeasureCount> outer) {
  CompassEntry entry{std::move(label), color_slot, inner, outer, {}};
  ValidationReport report = ValidateEntry(entry);
  if (!report.ok()) ThrowReport(report);
  return entry;
}

nlohmann::ordered_json ValidationReport::ToJson() const {
  ordered_json out = ordered_json::object();
  out["valid"] = ok();
  out["violations"] = ordered_json::array();
  for (const auto& v : violations) {
    out["violations"].push_back({{"path", v.path}, {"message", v.message}});
  }
  return out;
}

ValidationReport ValidateEntry(const CompassEntry& entry) {
  ValidationReport report;
  if (entry.label.empty()) {
    report.violations.push_back({"label", "must not be empty"});
  } else if (Utf8Length(entry.label) > kMaxLabelLength) {
    report.violations.push_back({"label", "longer than 200 characters"});
  }
  if (entry.color_slot < 0 || entry.color_slot >= kPaletteSize) {
    report.violations.push_back({"color_slot", "must be in [0, 5]"});
  }
  for (const auto& [path, value] : entry.provenance) {
    if (!IsValidFieldPath(path)) {
      report.violations.push_back({"provenance." + path, "unknown field path"});
    }
  }
  return report;
}

ValidationReport ValidateDocument(const CompassDocument& doc) {
  ValidationReport report;
  if (doc.version != kFormatVersion) {
    report.violations.push_back({"version", "unsupported format version (expected \"1\")"});
  }
  if (doc.entries.size() > kMaxEntries) {
    report.violations.push_back(
        {"entries", "at most 6 entries are allowed (one per palette color)"});
  }
  std::set<int> seen;
  for (std::size_t i = 0; i < doc.entries.size(); ++i) {
    for (auto& v : ValidateEntry(doc.entries[i]).violations) {
      report.violations.push_back({EntryPrefix(i) + "." + v.path, std::move(v.message)});
    }
    if (!seen.insert(doc.entries[i].color_slot).second) {
      report.violations.push_back({EntryPrefix(i) + ".color_slot", "duplicate color slot"});
    }
  }
  return report;
}

ValidationReport ValidateEntry(const nlohmann::json& entry, bool lenient,
                               std::vector<std::string>* warnings) {
  Checker checker(lenient, warnings);
  checker.CheckEntry(entry, "", false);
  return checker.Take();
}

ValidationReport ValidateDocument(const nlohmann::json& doc, bool lenient,
                                  std::vector<std::string>* warnings) {
  Checker checker(lenient, warnings);
  if (!doc.is_object()) {
    checker.Fail("", "top level must be an object");
    return checker.Take();
  }
  checker.CheckVersion(doc);
  if (IsSingleEntryFile(doc)) {
    checker.CheckEntry(doc, "", true);
    return checker.Take();
  }
  CheckDocumentShape(checker, doc);
  for (const auto& [key, value] : doc.items()) {
    if (key != "version" && key != "entries") checker.Unknown(key);
  }
  return checker.Take();
}

CompassDocument ParseDocument(std::string_view text, const ParseOptions& options,
                              std::vector<std::string>* warnings) {
  const json doc = ParseJson(text);
  RequireObjectWithVersion(doc);
  ValidationReport report = ValidateDocument(doc, options.lenient, warnings);
  if (!report.ok()) ThrowReport(report);

  CompassDocument out;
  if (IsSingleEntryFile(doc)) {
    out.entries.push_back(EntryFromJson(doc));
  } else {
    for (const json& e : doc.at("entries")) out.entries.push_back(EntryFromJson(e));
  }
  return out;
}

CompassEntry ParseEntryFile(std::string_view text, const ParseOptions& options,
                            std::vector<std::string>* warnings) {
  const json doc = ParseJson(text);
  RequireObjectWithVersion(doc);
  if (!IsSingleEntryFile(doc)) {
    throw Error(ErrorCode::kSchema, "expected a single-entry file with a 'label' field");
  }
  Checker checker(options.lenient, warnings);
  checker.CheckEntry(doc, "", true);
  ValidationReport report = checker.Take();
  if (!report.ok()) ThrowReport(report);
  return EntryFromJson(doc);
}

nlohmann::ordered_json EntryToJson(const CompassEntry& entry) {
  ordered_json out = ordered_json::object();
  out["label"] = entry.label;
  out["color_slot"] = entry.color_slot;
  ordered_json inner = ordered_json::object();
  for (auto d : kInnerDimensions) inner[std::string(Key(d))] = std::string(Key(entry.mark(d)));
  out["inner"] = std::move(inner);
  ordered_json outer = ordered_json::object();
  for (auto m : kOuterMeasures) outer[std::string(Key(m))] = entry.reports(m);
  out["outer"] = std::move(outer);
  if (!entry.provenance.empty()) {
    ordered_json prov = ordered_json::object();
    for (const auto& [path, value] : entry.provenance) prov[path] = std::string(Key(value));
    out["provenance"] = std::move(prov);
  }
  return out;
}

nlohmann::ordered_json DocumentToJson(const CompassDocument& doc) {
  ordered_json out = ordered_json::object();
  out["version"] = doc.version;
  out["entries"] = ordered_json::array();
  for (const auto& e : doc.entries) out["entries"].push_back(EntryToJson(e));
  return out;
}

std::string SerializeDocument(const CompassDocument& doc) {
  return DocumentToJson(doc).dump(2) + "\n";
}

std::string SerializeEntryFile(const CompassEntry& entry) {
  ordered_json out = ordered_json::object();
  out["version"] = std::string(kFormatVersion);
  const ordered_json body = EntryToJson(entry);
  for (const auto& [key, value] : body.items()) out[key] = value;
  return out.dump(2) + "\n";
}

std::vector<DiffItem> DiffEntries(const CompassEntry& a, const CompassEntry& b) {
  std::vector<DiffItem> out;
  for (auto d : kInnerDimensions) {
    if (a.mark(d) != b.mark(d)) {
      out.push_back({"inner." + std::string(Key(d)), std::string(Key(a.mark(d))),
                     std::string(Key(b.mark(d)))});
    }
  }
  for (auto m : kOuterMeasures) {
    if (a.reports(m) != b.reports(m)) {
      out.push_back({"outer." + std::string(Key(m)), a.reports(m) ? "true" : "false",
                     b.reports(m) ? "true" : "false"});
    }
  }
  return out;
}

}  // namespace cleva
