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

#ifndef FSC_ERROR_HPP
#define FSC_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace fsc {

enum class Errc {
  io,
  bad_magic,
  truncated,
  non_finite,
  invalid_code,
  dimension_mismatch,
  alphabet_mismatch,
  invalid_argument,
  duplicate_id,
  unknown_value,
  missing_file,
  missing_template,
  representation_mismatch,
  empty_input,
  unsupported_format,
  invariant,
};

std::string_view to_string(Errc code);

/// Every failure raised by the library carries one of the codes above.
/// `Errc::invariant` marks an internal consistency failure (a bug), all
/// other codes describe bad input data or configuration.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message);

  Errc code() const noexcept { return code_; }
  const std::string& detail() const noexcept { return detail_; }

  // Same code, message prefixed with `context` (typically a file path).
  Error with_context(const std::string& context) const;

 private:
  Errc code_;
  std::string detail_;
};

[[noreturn]] void fail(Errc code, const std::string& message);

inline void require(bool condition, Errc code, const std::string& message) {
  if (!condition) fail(code, message);
}

}  // namespace fsc

#endif  // FSC_ERROR_HPP
