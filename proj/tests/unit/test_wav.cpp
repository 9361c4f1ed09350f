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

#include <cstring>

#include "doctest.h"
#include "fsc/error.hpp"
#include "fsc/wav.hpp"

TEST_CASE("pcm16 round trip") {
  fsc::Audio a{{0.0F, 0.5F, -0.5F, -1.0F, 0.25F}, 16000, 1};
  const auto back = fsc::decode_wav(fsc::encode_wav_pcm16(a));
  CHECK(back.sample_rate_hz == 16000);
  CHECK(back.channels == 1);
  REQUIRE(back.samples.size() == a.samples.size());
  for (std::size_t i = 0; i < a.samples.size(); ++i) CHECK(back.samples[i] == doctest::Approx(a.samples[i]).epsilon(1e-4));
}

TEST_CASE("stereo is decoded with its channel count") {
  fsc::Audio a{{0.1F, 0.2F, 0.3F, 0.4F}, 8000, 2};
  const auto back = fsc::decode_wav(fsc::encode_wav_pcm16(a));
  CHECK(back.channels == 2);
  CHECK(back.frames() == 2);
}

TEST_CASE("malformed wav") {
  std::vector<std::uint8_t> junk(44, 0);
  CHECK_THROWS_AS(fsc::decode_wav(junk), fsc::Error);
  auto bytes = fsc::encode_wav_pcm16(fsc::Audio{std::vector<float>(100, 0.0F), 16000, 1});
  bytes.resize(bytes.size() - 50);
  CHECK_THROWS_AS(fsc::decode_wav(bytes), fsc::Error);
}
