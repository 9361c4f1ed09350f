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

#include "doctest.h"
#include "fsc/align.hpp"
#include "fsc/error.hpp"
#include "oracles.hpp"

using fsc::CodeSequence;
using fsc::FeatureSequence;

TEST_CASE("cosine distance") {
  const std::vector<float> a{1, 0}, b{-1, 0}, z{0, 0}, c{3, 4};
  CHECK(fsc::cosine_distance(c, c) == doctest::Approx(0.0));
  CHECK(fsc::cosine_distance(a, b) == 2.0);
  CHECK(fsc::cosine_distance(a, z) == 1.0);
  CHECK(fsc::cosine_distance(z, z) == 1.0);
}

TEST_CASE("dtw basics") {
  oracle::Rng rng(1);
  const auto x = oracle::random_features(rng, 6, 3);
  const auto self = fsc::dtw(x, x);
  CHECK(self.raw_cost == doctest::Approx(0.0).epsilon(1e-12));
  REQUIRE(self.path.size() == 6);
  for (std::size_t i = 0; i < 6; ++i) CHECK(self.path.steps[i] == std::make_pair(i, i));

  const auto a = FeatureSequence::from_rows({{1, 2}});
  const auto b = FeatureSequence::from_rows({{2, -1}});
  const auto r = fsc::dtw(a, b);
  CHECK(r.raw_cost == doctest::Approx(fsc::cosine_distance(a.frame(0), b.frame(0))));
  CHECK(r.path.size() == 1);
  CHECK(r.normalized_cost == r.raw_cost);

  CHECK_THROWS_AS(fsc::dtw(a, FeatureSequence::from_rows({{1, 2, 3}})), fsc::Error);
}

TEST_CASE("dtw matches exhaustive path enumeration") {
  oracle::Rng rng(2);
  for (int i = 0; i < 200; ++i) {
    const std::size_t d = rng.between(1, 3);
    const auto a = oracle::random_features(rng, rng.between(1, 5), d);
    const auto b = oracle::random_features(rng, rng.between(1, 5), d);
    const auto r = fsc::dtw(a, b);
    const auto brute = oracle::brute_force_dtw(a, b);
    CHECK(std::abs(r.raw_cost - static_cast<double>(brute.cost)) < 1e-9);
    CHECK(fsc::is_valid_path(r.path, a.length(), b.length()));
    CHECK(r.normalized_cost == doctest::Approx(r.raw_cost / r.path.size()));
    long double along = 0;
    for (const auto& [p, q] : r.path.steps) along += oracle::cosine_distance(a.frame(p), b.frame(q));
    CHECK(std::abs(static_cast<double>(along) - r.raw_cost) < 1e-9);
  }
}

TEST_CASE("dtw is symmetric in cost") {
  oracle::Rng rng(3);
  for (int i = 0; i < 50; ++i) {
    const auto a = oracle::random_features(rng, rng.between(1, 12), 4);
    const auto b = oracle::random_features(rng, rng.between(1, 12), 4);
    CHECK(fsc::dtw_cost(a, b) == doctest::Approx(fsc::dtw_cost(b, a)).epsilon(1e-12));
  }
}

TEST_CASE("path validity check") {
  fsc::WarpPath p{{{0, 0}, {1, 1}, {1, 2}}};
  CHECK(fsc::is_valid_path(p, 2, 3));
  CHECK_FALSE(fsc::is_valid_path(p, 3, 3));
  fsc::WarpPath jump{{{0, 0}, {2, 2}}};
  CHECK_FALSE(fsc::is_valid_path(jump, 3, 3));
  fsc::WarpPath back{{{0, 0}, {1, 0}, {0, 1}, {1, 1}}};
  CHECK_FALSE(fsc::is_valid_path(back, 2, 2));
}

TEST_CASE("edit distance") {
  using V = std::vector<std::uint32_t>;
  CHECK(fsc::edit_distance(V{0, 1, 2}, V{0, 1, 2}) == 0);
  CHECK(fsc::edit_distance(V{0, 1, 2}, V{0}) == 2);
  CHECK(fsc::ned(V{0, 1, 2, 2, 0, 1, 2}, V{1, 1, 2, 2, 1, 1, 0}) == doctest::Approx(3.0 / 7.0));
  CHECK(fsc::ned(V{0, 0, 0}, V{1, 1, 1}) == 1.0);
  CHECK(fsc::ned(V{4}, V{4}) == 0.0);
  CHECK_THROWS_AS(fsc::edit_distance(CodeSequence({0}, 3), CodeSequence({0}, 4)), fsc::Error);
  CHECK_THROWS_AS(fsc::ned(V{}, V{}), fsc::Error);
}

TEST_CASE("edit distance matches recursion") {
  oracle::Rng rng(4);
  for (int i = 0; i < 500; ++i) {
    const auto a = oracle::random_codes(rng, rng.between(1, 6), 3);
    const auto b = oracle::random_codes(rng, rng.between(1, 6), 3);
    CHECK(fsc::edit_distance(a, b) == oracle::levenshtein(a, b));
    const double n = fsc::ned(a, b);
    CHECK(n >= 0.0);
    CHECK(n <= 1.0);
    CHECK(fsc::edit_distance(a, b) == fsc::edit_distance(b, a));
  }
}
