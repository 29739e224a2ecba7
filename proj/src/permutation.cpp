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

#include "qiso/permutation.hpp"

#include <numeric>
#include <stdexcept>

namespace qiso {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int n = degree();
  if (n < 1) throw std::invalid_argument("permutation degree must be >= 1");
  std::vector<bool> seen(n, false);
  for (int v : images_) {
    if (v < 0 || v >= n || seen[v])
      throw std::invalid_argument("image array is not a bijection");
    seen[v] = true;
  }
}

Permutation Permutation::identity(int degree) {
  std::vector<int> im(degree);
  std::iota(im.begin(), im.end(), 0);
  return Permutation(std::move(im));
}

Permutation Permutation::transposition(int degree, int a, int b) {
  Permutation p = identity(degree);
  if (a < 0 || b < 0 || a >= degree || b >= degree)
    throw std::invalid_argument("transposition point out of range");
  std::swap(p.images_[a], p.images_[b]);
  return p;
}

Permutation Permutation::cycle(int degree, const std::vector<int>& points) {
  Permutation p = identity(degree);
  const int k = static_cast<int>(points.size());
  for (int i = 0; i < k; ++i) {
    int from = points[i];
    int to = points[(i + 1) % k];
    if (from < 0 || from >= degree)
      throw std::invalid_argument("cycle point out of range");
    p.images_[from] = to;
  }
  // Re-validate: repeated points would break bijectivity.
  return Permutation(p.images_);
}

bool Permutation::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (int i = 0; i < degree(); ++i) inv[images_[i]] = i;
  Permutation p;
  p.images_ = std::move(inv);
  return p;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree())
    throw std::invalid_argument("permutation degree mismatch");
  std::vector<int> im(a.images_.size());
  for (int i = 0; i < a.degree(); ++i) im[i] = a.images_[b.images_[i]];
  Permutation p;
  p.images_ = std::move(im);
  return p;
}

std::string Permutation::to_cycle_string() const {
  const int n = degree();
  std::vector<bool> done(n, false);
  std::string out;
  for (int i = 0; i < n; ++i) {
    if (done[i] || images_[i] == i) continue;
    out += "(";
    int j = i;
    bool first = true;
    while (!done[j]) {
      done[j] = true;
      if (!first) out += " ";
      out += std::to_string(j + 1);
      first = false;
      j = images_[j];
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

std::string string_action(const Permutation& p, std::string_view s) {
  if (static_cast<int>(s.size()) != p.degree())
    throw std::invalid_argument("string length must equal permutation degree");
  std::string out(s.size(), '\0');
  for (int i = 0; i < p.degree(); ++i) out[i] = s[p(i)];
  return out;
}

}  // namespace qiso
