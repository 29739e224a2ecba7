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

#include <cmath>
#include <vector>

#include "qiso/circuit.hpp"
#include "qiso/graph.hpp"
#include "qiso/state.hpp"

namespace qiso::testutil {

/// chi^2 critical value at significance 1e-3: exact table for small df,
/// Wilson-Hilferty beyond it.
inline double chi2_critical_1e3(int df) {
  static const double kTable[] = {10.828, 13.816, 16.266, 18.467, 20.515,
                                  22.458, 24.322, 26.124, 27.877, 29.588};
  if (df >= 1 && df <= 10) return kTable[df - 1];
  const double z = 3.090232;  // N(0,1) quantile at 0.999
  const double a = 2.0 / (9.0 * df);
  const double t = 1.0 - a + z * std::sqrt(a);
  return df * t * t * t;
}

/// Independent dot-product oracle (plain loop, no linear algebra library).
inline Complex manual_inner_product(const PureState& a, const PureState& b) {
  Complex acc(0, 0);
  for (std::int64_t i = 0; i < a.amps.size(); ++i)
    acc += std::conj(a.amps[i]) * b.amps[i];
  return acc;
}

inline PureState state_from(int n, std::initializer_list<Complex> amps) {
  PureState psi;
  psi.n = n;
  psi.amps = Vector(static_cast<std::int64_t>(amps.size()));
  std::int64_t i = 0;
  for (const auto& a : amps) psi.amps[i++] = a;
  return psi;
}

inline PureState random_state(int n, Rng& rng) {
  return run_pure(random_pure_circuit(n, 4 * n + 6, rng, false));
}

/// Every labeled graph on n vertices (2^(n choose 2) of them).
inline std::vector<Graph> all_graphs(int n) {
  std::vector<std::pair<int, int>> slots;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) slots.emplace_back(i, j);
  std::vector<Graph> graphs;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size());
       ++mask) {
    std::vector<std::pair<int, int>> edges;
    for (std::size_t b = 0; b < slots.size(); ++b)
      if (mask & (std::uint64_t{1} << b)) edges.push_back(slots[b]);
    graphs.push_back(Graph::from_edges(n, std::move(edges)));
  }
  return graphs;
}

inline Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

}  // namespace qiso::testutil
