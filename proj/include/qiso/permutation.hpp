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

#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace qiso {

/// A bijection on {0, ..., degree-1}; images()[i] is the image of point i.
/// Points are 0-based in memory and 1-based in every external format, with
/// the conversion done at the I/O boundary only.
///
/// Composition convention: (a * b)(i) == a(b(i)).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int degree);
  static Permutation transposition(int degree, int a, int b);
  /// Cycle (points[0] points[1] ... points[k-1]); other points fixed.
  static Permutation cycle(int degree, const std::vector<int>& points);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[i]; }
  const std::vector<int>& images() const { return images_; }

  bool is_identity() const;
  Permutation inverse() const;

  friend Permutation operator*(const Permutation& a, const Permutation& b);
  bool operator==(const Permutation&) const = default;
  auto operator<=>(const Permutation&) const = default;

  /// Disjoint-cycle notation with 1-based points, e.g. "(1 2 3)(5 6)".
  std::string to_cycle_string() const;

 private:
  std::vector<int> images_;
};

/// Action of a permutation on a string: result[i] = s[p(i)].
std::string string_action(const Permutation& p, std::string_view s);

}  // namespace qiso
