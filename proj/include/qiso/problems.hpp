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

#include <optional>
#include <vector>

#include "qiso/circuit.hpp"
#include "qiso/graph.hpp"
#include "qiso/perm_group.hpp"
#include "qiso/state.hpp"

namespace qiso {

/// Promise gap when an instance does not specify one.
inline double default_epsilon(int n) { return 1.0 / n; }

/// StateIsomorphism instance: two pure-state circuits on n qubits, a
/// permutation group over the qubits, and the promise gap epsilon.
/// epsilon <= 0 means "use default_epsilon(n)".
struct SiInstance {
  Circuit circuit0;
  Circuit circuit1;
  PermGroup group;
  double epsilon = 0.0;

  int n() const { return circuit0.n_out; }
  double eps() const { return epsilon > 0 ? epsilon : default_epsilon(n()); }
};

/// Stabilizer special case: circuits restricted to Clifford gates, which
/// makes the decision procedure exact dyadic arithmetic.
struct SsiInstance {
  Circuit circuit0;
  Circuit circuit1;
  PermGroup group;
  double epsilon = 0.0;

  int n() const { return circuit0.n_out; }
  double eps() const { return epsilon > 0 ? epsilon : default_epsilon(n()); }
  SiInstance as_si() const { return {circuit0, circuit1, group, epsilon}; }
};

/// Mixed-state instance.  Canonical instances carry circuits in Q_{2n,n};
/// reduced instances may carry an explicit density matrix on either side
/// (the marginal-product state of the ProductState reduction has no exact
/// realization in the discrete gate set).
struct MsiInstance {
  std::optional<Circuit> circuit0;
  std::optional<Circuit> circuit1;
  std::optional<DensityMatrix> rho0;
  std::optional<DensityMatrix> rho1;
  PermGroup group;
  double epsilon = 0.0;

  int n() const;
  double eps() const { return epsilon > 0 ? epsilon : default_epsilon(n()); }
  DensityMatrix state0() const;
  DensityMatrix state1() const;
};

enum class Verdict { kYes, kNo, kPromiseViolated };

/// Oracle output: the verdict, the witnessing permutation when one exists,
/// and the achieved extremal value (max overlap for SI/SSI, min trace
/// distance for MSI).
struct PromiseLabel {
  Verdict verdict = Verdict::kPromiseViolated;
  std::optional<Permutation> witness;
  double extremal = 0.0;
};

/// Brute-force oracle for SI over the enumerated group.
/// YES when max_sigma |<psi1|P_sigma|psi0>| >= 1 - 1e-9 (witness: smallest
/// such sigma), NO when the max is <= eps + 1e-9, violation otherwise.
PromiseLabel decide_si(const SiInstance& inst,
                       std::uint64_t cap = kDefaultEnumerationCap);

/// Exact oracle for SSI via stabilizer overlaps; YES requires overlap
/// exactly 1.
PromiseLabel decide_ssi(const SsiInstance& inst,
                        std::uint64_t cap = kDefaultEnumerationCap);

/// Brute-force oracle for MSI: YES when min_sigma D(P rho0 P^dag, rho1)
/// <= eps, NO when the min is >= 1 - eps.
PromiseLabel decide_msi(const MsiInstance& inst,
                        std::uint64_t cap = kDefaultEnumerationCap);

/// QCMA verification: rejects outright when sigma is not in the group,
/// otherwise the empirical SWAP-test acceptance of (P_sigma|psi0>, |psi1>).
double verify_certificate(const SiInstance& inst, const Permutation& sigma,
                          int trials, Rng& rng);

/// GraphIsomorphism -> S_n-SSI through graph states; epsilon = 2^{-1/2}.
SsiInstance reduce_gi_to_ssi(const Graph& g, const Graph& h);

/// ProductState -> S_n-MSI: the second state is the tensor product of the
/// input's single-qubit marginals.  Requires q in Q_{2n,n} with n <= 4.
MsiInstance reduce_productstate_to_msi(const Circuit& q, double epsilon = 0.0);

/// rho_1 x ... x rho_n from the single-qubit marginals of rho.
DensityMatrix marginal_product(const DensityMatrix& rho);

struct GutoskiReport {
  double alpha = 0.0;              // ||rho - sigma_1 x ... x sigma_n||_1
  double marginal_norm = 0.0;      // ||rho - rho_1 x ... x rho_n||_1
  double bound = 0.0;              // (n + 1) * alpha
  bool holds = false;
};

/// Numeric check of the product-witness inequality
/// ||rho - rho_1 x...x rho_n||_1 <= (n+1) ||rho - sigma_1 x...x sigma_n||_1.
GutoskiReport check_gutoski_bound(
    const DensityMatrix& rho, const std::vector<DensityMatrix>& witness);

}  // namespace qiso
