// Copyright 2026 The fsc Authors.
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

#include "fsc/manifest.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <unordered_set>

#include <json.hpp>

#include "fsc/error.hpp"
#include "fsc/io.hpp"

namespace fsc {

std::string_view to_string(Role role) {
  switch (role) {
    case Role::template_: return "template";
    case Role::dev: return "dev";
    case Role::test: return "test";
  }
  return "?";
}

std::string_view to_string(Label label) {
  switch (label) {
    case Label::positive: return "positive";
    case Label::negative: return "negative";
    case Label::impostor: return "impostor";
  }
  return "?";
}

Role parse_role(std::string_view text) {
  if (text == "template") return Role::template_;
  if (text == "dev") return Role::dev;
  if (text == "test") return Role::test;
  fail(Errc::unknown_value, "unknown role '" + std::string(text) + "'");
}

Label parse_label(std::string_view text) {
  if (text == "positive") return Label::positive;
  if (text == "negative") return Label::negative;
  if (text == "impostor") return Label::impostor;
  fail(Errc::unknown_value, "unknown label '" + std::string(text) + "'");
}

std::vector<const ManifestEntry*> Manifest::with_role(Role role) const {
  std::vector<const ManifestEntry*> out;
  for (const auto& e : entries) {
    if (e.role == role) out.push_back(&e);
  }
  return out;
}

std::vector<const ManifestEntry*> Manifest::templates_of(std::string_view word_class) const {
  std::vector<const ManifestEntry*> out;
  for (const auto& e : entries) {
    if (e.role == Role::template_ && e.word_class == word_class) out.push_back(&e);
  }
  return out;
}

std::vector<std::string> Manifest::template_classes() const {
  std::set<std::string> classes;
  for (const auto& e : entries) {
    if (e.role == Role::template_) classes.insert(e.word_class);
  }
  return {classes.begin(), classes.end()};
}

namespace {

const std::set<std::string> kKeys{"id", "class", "path", "role", "label", "speaker"};

std::string string_field(const nlohmann::json& obj, const char* key) {
  const auto& v = obj.at(key);
  require(v.is_string(), Errc::invalid_argument, std::string("key '") + key + "' must be a string");
  return v.get<std::string>();
}

ManifestEntry parse_entry(const std::string& line, const std::filesystem::path& base_dir) {
  nlohmann::json obj;
  try {
    obj = nlohmann::json::parse(line);
  } catch (const nlohmann::json::parse_error& e) {
    fail(Errc::invalid_argument, std::string("malformed JSON: ") + e.what());
  }
  require(obj.is_object(), Errc::invalid_argument, "entry must be a JSON object");
  std::set<std::string> keys;
  for (const auto& item : obj.items()) keys.insert(item.key());
  require(keys == kKeys, Errc::invalid_argument,
          "entry keys must be exactly {id, class, path, role, label, speaker}");

  ManifestEntry entry;
  entry.id = string_field(obj, "id");
  entry.word_class = string_field(obj, "class");
  entry.role = parse_role(string_field(obj, "role"));
  entry.label = parse_label(string_field(obj, "label"));
  entry.speaker = string_field(obj, "speaker");
  std::filesystem::path raw = string_field(obj, "path");
  entry.path = raw.is_absolute() ? raw : base_dir / raw;
  require(!entry.id.empty(), Errc::invalid_argument, "empty id");
  require(std::filesystem::exists(entry.path), Errc::missing_file,
          "entry '" + entry.id + "' references missing file " + entry.path.string());
  return entry;
}

}  // namespace

Manifest parse_manifest(std::string_view text, const std::filesystem::path& base_dir) {
  Manifest manifest;
  std::unordered_set<std::string> ids;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      auto entry = parse_entry(line, base_dir);
      require(ids.insert(entry.id).second, Errc::duplicate_id, "id '" + entry.id + "' appears more than once");
      manifest.entries.push_back(std::move(entry));
    } catch (const Error& e) {
      throw e.with_context("line " + std::to_string(line_no));
    }
  }
  require(!manifest.entries.empty(), Errc::empty_input, "manifest has no entries");

  std::set<std::string> template_classes;
  for (const auto& e : manifest.entries) {
    if (e.role == Role::template_) template_classes.insert(e.word_class);
  }
  for (const auto& e : manifest.entries) {
    if (e.role != Role::template_ && !template_classes.contains(e.word_class)) {
      fail(Errc::missing_template, std::string(to_string(e.role)) + " entry '" + e.id + "' has class '" +
                                       e.word_class + "' with no template entries");
    }
  }
  return manifest;
}

Manifest load_manifest(const std::filesystem::path& path) {
  const auto bytes = io::read_file(path);
  try {
    return parse_manifest(std::string_view(reinterpret_cast<const char*>(bytes.data()), bytes.size()),
                          path.parent_path());
  } catch (const Error& e) {
    throw e.with_context(path.string());
  }
}

std::string format_manifest_line(const ManifestEntry& entry) {
  nlohmann::ordered_json obj;
  obj["id"] = entry.id;
  obj["class"] = entry.word_class;
  obj["path"] = entry.path.generic_string();
  obj["role"] = to_string(entry.role);
  obj["label"] = to_string(entry.label);
  obj["speaker"] = entry.speaker;
  return obj.dump();
}

}  // namespace fsc
