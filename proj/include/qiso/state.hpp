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

#include <complex>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "qiso/rng.hpp"

namespace qiso {

using Complex = std::complex<double>;
using Vector = Eigen::VectorXcd;
using Matrix = Eigen::MatrixXcd;

/// Dense limit: 4096 amplitudes.
inline constexpr int kMaxDenseQubits = 12;
/// Tolerance for state identities (norms, unitarity, equality).
inline constexpr double kStateTol = 1e-9;
/// Tolerance for derived metric properties (triangle inequality etc).
inline constexpr double kMetricTol = 1e-8;

inline std::int64_t dim_of(int n) { return std::int64_t{1} << n; }

/// Pure n-qubit state as a dense amplitude vector of length 2^n.
/// Qubit 1 is the most significant bit of the basis index.
struct PureState {
  int n = 0;
  Vector amps;

  static PureState zero(int n);
  static PureState basis(int n, std::uint64_t index);
  double norm() const { return amps.norm(); }
};

/// Bit of basis index held by 0-based qubit q (qubit 0 is the MSB).
inline int qubit_bit(std::uint64_t index, int q, int n) {
  return static_cast<int>((index >> (n - 1 - q)) & 1u);
}

/// Unit-trace PSD matrix on 2^n dimensions.
struct DensityMatrix {
  int n = 0;
  Matrix rho;

  static DensityMatrix from_pure(const PureState& psi);
};

Complex inner_product(const PureState& a, const PureState& b);  // <a|b>

/// Acceptance probability of the SWAP test: (1 + |<a|b>|^2) / 2.
double swap_test_prob(const PureState& a, const PureState& b);

/// One Bernoulli sample of the SWAP test outcome (true = accept).
bool swap_test_sample(const PureState& a, const PureState& b, Rng& rng);

/// (1/2) sum |eigenvalues(r - s)| via Hermitian eigendecomposition.
double trace_distance(const DensityMatrix& r, const DensityMatrix& s);

/// Trace norm of a Hermitian matrix.
double trace_norm_hermitian(const Matrix& m);

/// Reduced state on the (ascending, 0-based) kept qubits.
DensityMatrix partial_trace(const DensityMatrix& r,
                            const std::vector<int>& keep);

DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b);
PureState tensor(const PureState& a, const PureState& b);
PureState tensor_power(const PureState& a, int k);

/// max_phi | a - e^{i phi} b |: zero iff equal up to a global phase.
double distance_up_to_phase(const PureState& a, const PureState& b);

/// Invariant checks used by tests.
bool is_valid_state(const PureState& psi, double tol = kStateTol);
bool is_valid_density(const DensityMatrix& rho, double tol = kStateTol);

}  // namespace qiso
