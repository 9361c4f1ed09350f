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

#include "fsc/error.hpp"

namespace fsc {

std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::io: return "io";
    case Errc::bad_magic: return "bad magic";
    case Errc::truncated: return "truncated";
    case Errc::non_finite: return "non-finite value";
    case Errc::invalid_code: return "invalid code";
    case Errc::dimension_mismatch: return "dimension mismatch";
    case Errc::alphabet_mismatch: return "alphabet mismatch";
    case Errc::invalid_argument: return "invalid argument";
    case Errc::duplicate_id: return "duplicate id";
    case Errc::unknown_value: return "unknown value";
    case Errc::missing_file: return "missing file";
    case Errc::missing_template: return "missing template";
    case Errc::representation_mismatch: return "representation mismatch";
    case Errc::empty_input: return "empty input";
    case Errc::unsupported_format: return "unsupported format";
    case Errc::invariant: return "invariant violation";
  }
  return "unknown";
}

Error::Error(Errc code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code), detail_(message) {}

Error Error::with_context(const std::string& context) const { return Error(code_, context + ": " + detail_); }

void fail(Errc code, const std::string& message) { throw Error(code, message); }

}  // namespace fsc
