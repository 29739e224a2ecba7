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

#include <cstdint>

#include "qiso/perm_group.hpp"
#include "qiso/permutation.hpp"
#include "qiso/state.hpp"

namespace qiso {

// The subsystem permutation unitary
//   P_sigma |x_1 ... x_n> = |x_sigma(1) ... x_sigma(n)>
// applied by index remapping of the amplitudes; the dense matrix is a debug
// path only.  Note the anti-homomorphism P_sigma P_tau = P_{tau . sigma}.

PureState apply_perm(const Permutation& sigma, const PureState& psi);
DensityMatrix conjugate_perm(const Permutation& sigma,
                             const DensityMatrix& rho);  // P rho P^dagger
Matrix perm_unitary_matrix(const Permutation& sigma);

/// The 2n-qubit circuit U_pi = SWAP . (P_{pi^-1} x P_pi), with SWAP
/// exchanging the two n-qubit halves, collapsed into a single permutation of
/// the 2n subsystems.
Permutation u_pi_permutation(const Permutation& pi);
PureState apply_u_pi(const Permutation& pi, const PureState& psi_2n);
Matrix u_pi_matrix(const Permutation& pi);

/// rho = (1/|G|) sum_pi (P_pi |psi><psi| P_pi^dagger)^{tensor k}.
/// Requires k * n <= 12 and |G| within the enumeration cap.
DensityMatrix group_twirl_mixture(const PureState& psi, const PermGroup& g,
                                  int k,
                                  std::uint64_t cap = kDefaultEnumerationCap);

}  // namespace qiso
