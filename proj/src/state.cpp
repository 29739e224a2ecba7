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

#include "qiso/state.hpp"

#include <algorithm>
#include <stdexcept>

#include "qiso/errors.hpp"

namespace qiso {

PureState PureState::zero(int n) { return basis(n, 0); }

PureState PureState::basis(int n, std::uint64_t index) {
  if (n < 1 || n > kMaxDenseQubits)
    throw TooManyQubits("dense simulation supports 1.." +
                        std::to_string(kMaxDenseQubits) + " qubits, got " +
                        std::to_string(n));
  PureState psi;
  psi.n = n;
  psi.amps = Vector::Zero(dim_of(n));
  psi.amps[static_cast<std::int64_t>(index)] = Complex(1.0, 0.0);
  return psi;
}

DensityMatrix DensityMatrix::from_pure(const PureState& psi) {
  DensityMatrix rho;
  rho.n = psi.n;
  rho.rho = psi.amps * psi.amps.adjoint();
  return rho;
}

Complex inner_product(const PureState& a, const PureState& b) {
  if (a.n != b.n) throw std::invalid_argument("state dimension mismatch");
  return a.amps.dot(b.amps);  // Eigen's dot conjugates the first argument
}

double swap_test_prob(const PureState& a, const PureState& b) {
  const double overlap = std::abs(inner_product(a, b));
  return (1.0 + overlap * overlap) / 2.0;
}

bool swap_test_sample(const PureState& a, const PureState& b, Rng& rng) {
  return bernoulli(rng, swap_test_prob(a, b));
}

double trace_norm_hermitian(const Matrix& m) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(m, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().cwiseAbs().sum();
}

double trace_distance(const DensityMatrix& r, const DensityMatrix& s) {
  if (r.n != s.n) throw std::invalid_argument("density dimension mismatch");
  return 0.5 * trace_norm_hermitian(r.rho - s.rho);
}

DensityMatrix partial_trace(const DensityMatrix& r,
                            const std::vector<int>& keep) {
  for (int q : keep)
    if (q < 0 || q >= r.n) throw std::invalid_argument("bad qubit index");
  for (std::size_t i = 1; i < keep.size(); ++i)
    if (keep[i] <= keep[i - 1])
      throw std::invalid_argument("keep list must be strictly ascending");
  if (keep.empty()) throw std::invalid_argument("keep list must be nonempty");

  std::vector<int> traced;
  for (int q = 0; q < r.n; ++q)
    if (!std::binary_search(keep.begin(), keep.end(), q)) traced.push_back(q);

  const int nk = static_cast<int>(keep.size());
  const int nt = static_cast<int>(traced.size());
  const std::int64_t dk = dim_of(nk), dt = dim_of(nt);

  // Assemble a full 2^n index from kept-part bits and traced-part bits.
  auto full_index = [&](std::int64_t kp, std::int64_t tp) {
    std::uint64_t idx = 0;
    for (int i = 0; i < nk; ++i)
      idx |= static_cast<std::uint64_t>(qubit_bit(kp, i, nk))
             << (r.n - 1 - keep[i]);
    for (int i = 0; i < nt; ++i)
      idx |= static_cast<std::uint64_t>(qubit_bit(tp, i, nt))
             << (r.n - 1 - traced[i]);
    return static_cast<std::int64_t>(idx);
  };

  DensityMatrix out;
  out.n = nk;
  out.rho = Matrix::Zero(dk, dk);
  for (std::int64_t i = 0; i < dk; ++i)
    for (std::int64_t j = 0; j < dk; ++j) {
      Complex acc(0, 0);
      for (std::int64_t t = 0; t < dt; ++t)
        acc += r.rho(full_index(i, t), full_index(j, t));
      out.rho(i, j) = acc;
    }
  return out;
}

DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b) {
  const std::int64_t da = dim_of(a.n), db = dim_of(b.n);
  DensityMatrix out;
  out.n = a.n + b.n;
  out.rho = Matrix(da * db, da * db);
  for (std::int64_t i = 0; i < da; ++i)
    for (std::int64_t j = 0; j < da; ++j)
      out.rho.block(i * db, j * db, db, db) = a.rho(i, j) * b.rho;
  return out;
}

PureState tensor(const PureState& a, const PureState& b) {
  if (a.n + b.n > kMaxDenseQubits)
    throw TooManyQubits("tensor product exceeds dense limit");
  const std::int64_t da = dim_of(a.n), db = dim_of(b.n);
  PureState out;
  out.n = a.n + b.n;
  out.amps = Vector(da * db);
  for (std::int64_t i = 0; i < da; ++i)
    out.amps.segment(i * db, db) = a.amps[i] * b.amps;
  return out;
}

PureState tensor_power(const PureState& a, int k) {
  if (k < 1) throw std::invalid_argument("tensor power needs k >= 1");
  PureState out = a;
  for (int i = 1; i < k; ++i) out = tensor(out, a);
  return out;
}

double distance_up_to_phase(const PureState& a, const PureState& b) {
  if (a.n != b.n) throw std::invalid_argument("state dimension mismatch");
  const Complex ip = inner_product(a, b);
  const double mag = std::abs(ip);
  const Complex phase =
      mag > 1e-15 ? std::conj(ip) / mag : Complex(1, 0);  // best aligning phase
  return (a.amps - phase * b.amps).norm();
}

bool is_valid_state(const PureState& psi, double tol) {
  if (psi.amps.size() != dim_of(psi.n)) return false;
  return std::abs(psi.norm() - 1.0) <= tol;
}

bool is_valid_density(const DensityMatrix& rho, double tol) {
  if (rho.rho.rows() != dim_of(rho.n) || rho.rho.cols() != dim_of(rho.n))
    return false;
  if ((rho.rho - rho.rho.adjoint()).cwiseAbs().maxCoeff() > tol) return false;
  if (std::abs(rho.rho.trace().real() - 1.0) > tol) return false;
  Eigen::SelfAdjointEigenSolver<Matrix> solver(rho.rho,
                                               Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff() >= -tol;
}

}  // namespace qiso
