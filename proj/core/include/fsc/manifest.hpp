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

#ifndef FSC_MANIFEST_HPP
#define FSC_MANIFEST_HPP

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace fsc {

enum class Role { template_, dev, test };
enum class Label { positive, negative, impostor };

std::string_view to_string(Role role);
std::string_view to_string(Label label);
Role parse_role(std::string_view text);
Label parse_label(std::string_view text);

// Impostors are curated negatives; every metric treats them as negatives.
inline bool is_positive(Label label) { return label == Label::positive; }

struct ManifestEntry {
  std::string id;
  std::string word_class;
  std::filesystem::path path;  // resolved against the manifest's directory
  Role role;
  Label label;
  std::string speaker;
};

struct Manifest {
  std::vector<ManifestEntry> entries;

  std::vector<const ManifestEntry*> with_role(Role role) const;
  std::vector<const ManifestEntry*> templates_of(std::string_view word_class) const;
  // Sorted, unique class names of template entries.
  std::vector<std::string> template_classes() const;
};

/// Parses a JSON-lines manifest. Each non-blank line must be an object with
/// exactly the keys id, class, path, role, label and speaker. Entry order is
/// preserved. Fails on duplicate ids, unknown role/label values, paths that
/// do not exist, and dev/test classes without any template.
Manifest load_manifest(const std::filesystem::path& path);

Manifest parse_manifest(std::string_view text, const std::filesystem::path& base_dir);

std::string format_manifest_line(const ManifestEntry& entry);

}  // namespace fsc

#endif  // FSC_MANIFEST_HPP
