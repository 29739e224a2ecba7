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

#include "qiso/qsim.hpp"

#include <stdexcept>

#include "qiso/errors.hpp"

namespace qiso {

namespace {

// Index remap table for P_sigma: out[y] = in[table[y]], where the source
// index has bit i equal to bit sigma^-1(i) of y.
std::vector<std::int64_t> perm_index_table(const Permutation& sigma) {
  const int n = sigma.degree();
  const std::int64_t dim = dim_of(n);
  const Permutation inv = sigma.inverse();
  std::vector<std::int64_t> table(dim);
  for (std::int64_t y = 0; y < dim; ++y) {
    std::uint64_t x = 0;
    for (int i = 0; i < n; ++i)
      x |= static_cast<std::uint64_t>(qubit_bit(y, inv(i), n))
           << (n - 1 - i);
    table[y] = static_cast<std::int64_t>(x);
  }
  return table;
}

}  // namespace

PureState apply_perm(const Permutation& sigma, const PureState& psi) {
  if (sigma.degree() != psi.n)
    throw std::invalid_argument("permutation degree must match qubit count");
  const auto table = perm_index_table(sigma);
  PureState out;
  out.n = psi.n;
  out.amps = Vector(psi.amps.size());
  for (std::int64_t y = 0; y < psi.amps.size(); ++y)
    out.amps[y] = psi.amps[table[y]];
  return out;
}

DensityMatrix conjugate_perm(const Permutation& sigma,
                             const DensityMatrix& rho) {
  if (sigma.degree() != rho.n)
    throw std::invalid_argument("permutation degree must match qubit count");
  const auto table = perm_index_table(sigma);
  DensityMatrix out;
  out.n = rho.n;
  out.rho = Matrix(rho.rho.rows(), rho.rho.cols());
  for (std::int64_t y = 0; y < rho.rho.rows(); ++y)
    for (std::int64_t z = 0; z < rho.rho.cols(); ++z)
      out.rho(y, z) = rho.rho(table[y], table[z]);
  return out;
}

Matrix perm_unitary_matrix(const Permutation& sigma) {
  const std::int64_t dim = dim_of(sigma.degree());
  const auto table = perm_index_table(sigma);
  Matrix m = Matrix::Zero(dim, dim);
  for (std::int64_t y = 0; y < dim; ++y) m(y, table[y]) = Complex(1, 0);
  return m;
}

Permutation u_pi_permutation(const Permutation& pi) {
  // U_pi = P_mu with mu(j) = n + pi(j) on the first half and
  // mu(n + j) = pi^-1(j) on the second, the composition of the half-swap
  // with (P_{pi^-1} x P_pi) under P_a P_b = P_{b . a}.
  const int n = pi.degree();
  const Permutation inv = pi.inverse();
  std::vector<int> images(2 * n);
  for (int j = 0; j < n; ++j) {
    images[j] = n + pi(j);
    images[n + j] = inv(j);
  }
  return Permutation(std::move(images));
}

PureState apply_u_pi(const Permutation& pi, const PureState& psi_2n) {
  if (psi_2n.n != 2 * pi.degree())
    throw std::invalid_argument("state must live on 2n qubits");
  return apply_perm(u_pi_permutation(pi), psi_2n);
}

Matrix u_pi_matrix(const Permutation& pi) {
  return perm_unitary_matrix(u_pi_permutation(pi));
}

DensityMatrix group_twirl_mixture(const PureState& psi, const PermGroup& g,
                                  int k, std::uint64_t cap) {
  if (g.degree() != psi.n)
    throw std::invalid_argument("group degree must match qubit count");
  if (k < 1) throw std::invalid_argument("copy count must be >= 1");
  if (k * psi.n > kMaxDenseQubits)
    throw TooManyQubits("k-fold tensor power exceeds the dense limit");
  const auto elements = g.enumerate(cap);
  const std::int64_t dim = dim_of(k * psi.n);
  DensityMatrix mix;
  mix.n = k * psi.n;
  mix.rho = Matrix::Zero(dim, dim);
  const double weight = 1.0 / static_cast<double>(elements.size());
  for (const auto& pi : elements) {
    PureState permuted = apply_perm(pi, psi);
    PureState power = tensor_power(permuted, k);
    mix.rho.noalias() += weight * (power.amps * power.amps.adjoint());
  }
  return mix;
}

}  // namespace qiso
