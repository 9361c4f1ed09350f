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

#ifndef FSC_IO_HPP
#define FSC_IO_HPP

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace fsc::io {

std::vector<std::uint8_t> read_file(const std::filesystem::path& path);

// Writes to a sibling temp file, then renames over `path`. A crash leaves
// either the old file or the complete new one.
void write_file_atomic(const std::filesystem::path& path, std::span<const std::uint8_t> bytes);
void write_file_atomic(const std::filesystem::path& path, std::string_view text);

void put_u32_le(std::vector<std::uint8_t>& out, std::uint32_t value);
void put_f32_le(std::vector<std::uint8_t>& out, float value);
std::uint32_t get_u32_le(std::span<const std::uint8_t> bytes, std::size_t offset);
float get_f32_le(std::span<const std::uint8_t> bytes, std::size_t offset);

/// Runs body(i) for i in [0, count) on up to `jobs` threads. Each index is
/// handled exactly once; callers write results into per-index slots so the
/// output order never depends on scheduling. The first exception thrown by
/// any body is rethrown after all workers join.
void parallel_for(std::size_t count, unsigned jobs, const std::function<void(std::size_t)>& body);

}  // namespace fsc::io

#endif  // FSC_IO_HPP
