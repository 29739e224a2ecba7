// Copyright 2026 The qiso Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include "qiso/perm_group.hpp"
#include "qiso/permutation.hpp"

using namespace qiso;

namespace {

Permutation t12(int degree) { return Permutation::transposition(degree, 0, 1); }

}  // namespace

TEST_CASE("composition basics") {
  const auto id3 = Permutation::identity(3);
  const auto swap2 = t12(2);

  CHECK(Permutation::identity(2) * swap2 == swap2);
  CHECK(swap2 * swap2 == Permutation::identity(2));

  // (1 2 3) . (1 2): cross-checked by applying both factors point by point.
  const auto cyc = Permutation::cycle(3, {0, 1, 2});
  const auto composed = cyc * t12(3);
  for (int i = 0; i < 3; ++i) CHECK(composed(i) == cyc(t12(3)(i)));
  CHECK(composed == Permutation({2, 1, 0}));

  CHECK(id3.is_identity());
  CHECK_THROWS_AS(id3 * swap2, std::invalid_argument);
}

TEST_CASE("inverse") {
  CHECK(Permutation::identity(4).inverse() == Permutation::identity(4));
  CHECK(t12(2).inverse() == t12(2));

  const auto cyc = Permutation::cycle(3, {0, 1, 2});
  const auto inv = cyc.inverse();
  CHECK(inv == Permutation::cycle(3, {0, 2, 1}));
  for (int i = 0; i < 3; ++i) CHECK(inv(cyc(i)) == i);
}

TEST_CASE("group laws on random elements") {
  Rng rng = make_rng(42);
  for (int trial = 0; trial < 200; ++trial) {
    const int degree = 2 + uniform_int(rng, 7);
    const auto g = PermGroup::symmetric(degree);
    const auto a = g.sample_uniform(rng);
    const auto b = g.sample_uniform(rng);
    const auto c = g.sample_uniform(rng);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * a.inverse() == Permutation::identity(degree));
    CHECK(a.inverse() * a == Permutation::identity(degree));
  }
}

TEST_CASE("string action definition") {
  CHECK(string_action(Permutation::identity(3), "abc") == "abc");
  CHECK(string_action(t12(2), "ab") == "ba");
  // sigma(s)_i = s_{sigma(i)} applied index by index.
  CHECK(string_action(Permutation::cycle(3, {0, 1, 2}), "abc") == "bca");
  CHECK_THROWS_AS(string_action(t12(2), "abc"), std::invalid_argument);
}

TEST_CASE("string action is a right action (exhaustive, n <= 5)") {
  for (int n = 2; n <= 5; ++n) {
    const auto elements = PermGroup::symmetric(n).enumerate();
    std::string s;
    for (int i = 0; i < n; ++i) s += static_cast<char>('a' + i);
    for (const auto& a : elements)
      for (const auto& b : elements)
        CHECK(string_action(a, string_action(b, s)) ==
              string_action(b * a, s));
  }
}

TEST_CASE("validation rejects non-bijections") {
  CHECK_THROWS_AS(Permutation({0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation({1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation(std::vector<int>{}), std::invalid_argument);
}

TEST_CASE("cycle notation") {
  CHECK(Permutation::identity(3).to_cycle_string() == "()");
  CHECK(Permutation::cycle(3, {0, 1, 2}).to_cycle_string() == "(1 2 3)");
  CHECK(Permutation({1, 0, 3, 2}).to_cycle_string() == "(1 2)(3 4)");
}
