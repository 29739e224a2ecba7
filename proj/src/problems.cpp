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

#include "qiso/problems.hpp"

#include <cmath>
#include <stdexcept>

#include "qiso/errors.hpp"
#include "qiso/qsim.hpp"
#include "qiso/tableau.hpp"

namespace qiso {

namespace {

constexpr double kDecisionTol = 1e-9;

void check_si_shape(const SiInstance& inst) {
  inst.circuit0.validate();
  inst.circuit1.validate();
  if (inst.circuit0.n_in != inst.circuit0.n_out ||
      inst.circuit1.n_in != inst.circuit1.n_out)
    throw std::invalid_argument("SI circuits must be pure-state circuits");
  if (inst.circuit0.n_out != inst.circuit1.n_out)
    throw std::invalid_argument("SI circuits must share the qubit count");
  if (inst.group.degree() != inst.circuit0.n_out)
    throw std::invalid_argument("group degree must match the qubit count");
}

}  // namespace

int MsiInstance::n() const {
  if (circuit0) return circuit0->n_out;
  if (rho0) return rho0->n;
  throw std::invalid_argument("MSI instance has no first state");
}

DensityMatrix MsiInstance::state0() const {
  if (rho0) return *rho0;
  if (circuit0) return run_mixed(*circuit0);
  throw std::invalid_argument("MSI instance has no first state");
}

DensityMatrix MsiInstance::state1() const {
  if (rho1) return *rho1;
  if (circuit1) return run_mixed(*circuit1);
  throw std::invalid_argument("MSI instance has no second state");
}

PromiseLabel decide_si(const SiInstance& inst, std::uint64_t cap) {
  check_si_shape(inst);
  const PureState psi0 = run_pure(inst.circuit0);
  const PureState psi1 = run_pure(inst.circuit1);
  const auto elements = inst.group.enumerate(cap);

  double best = -1.0;
  std::optional<Permutation> yes_witness;
  std::optional<Permutation> arg_best;
  for (const auto& sigma : elements) {
    const double overlap =
        std::abs(inner_product(psi1, apply_perm(sigma, psi0)));
    if (overlap > best) {
      best = overlap;
      arg_best = sigma;
    }
    if (!yes_witness && overlap >= 1.0 - kDecisionTol) yes_witness = sigma;
  }
  if (yes_witness) return {Verdict::kYes, yes_witness, best};
  if (best <= inst.eps() + kDecisionTol)
    return {Verdict::kNo, std::nullopt, best};
  return {Verdict::kPromiseViolated, arg_best, best};
}

PromiseLabel decide_ssi(const SsiInstance& inst, std::uint64_t cap) {
  check_si_shape(inst.as_si());
  if (!inst.circuit0.is_clifford() || !inst.circuit1.is_clifford())
    throw std::invalid_argument("SSI circuits must be stabilizer circuits");
  const StabilizerTableau t0 = run_stabilizer(inst.circuit0);
  const StabilizerTableau t1 = run_stabilizer(inst.circuit1);
  const auto elements = inst.group.enumerate(cap);

  double best = -1.0;
  std::optional<Permutation> yes_witness;
  std::optional<Permutation> arg_best;
  for (const auto& sigma : elements) {
    const OverlapResult overlap =
        stabilizer_overlap(t1, permute_qubits(t0, sigma));
    if (overlap.value > best) {
      best = overlap.value;
      arg_best = sigma;
    }
    if (!yes_witness && !overlap.orthogonal && overlap.mismatch_count == 0)
      yes_witness = sigma;
  }
  if (yes_witness) return {Verdict::kYes, yes_witness, best};
  // Overlaps are exact dyadic powers; the slack only absorbs decimal
  // representation error in a caller-provided epsilon.
  if (best <= inst.eps() + 1e-12) return {Verdict::kNo, std::nullopt, best};
  return {Verdict::kPromiseViolated, arg_best, best};
}

PromiseLabel decide_msi(const MsiInstance& inst, std::uint64_t cap) {
  const DensityMatrix rho0 = inst.state0();
  const DensityMatrix rho1 = inst.state1();
  if (rho0.n != rho1.n)
    throw std::invalid_argument("MSI states must share the qubit count");
  if (inst.group.degree() != rho0.n)
    throw std::invalid_argument("group degree must match the qubit count");
  if (rho0.n > 6) throw TooManyQubits("MSI decision is limited to 6 qubits");
  const auto elements = inst.group.enumerate(cap);

  double best = 2.0;
  std::optional<Permutation> arg_best;
  for (const auto& sigma : elements) {
    const double d = trace_distance(conjugate_perm(sigma, rho0), rho1);
    if (d < best) {
      best = d;
      arg_best = sigma;
    }
  }
  if (best <= inst.eps() + kDecisionTol)
    return {Verdict::kYes, arg_best, best};
  if (best >= 1.0 - inst.eps() - kDecisionTol)
    return {Verdict::kNo, std::nullopt, best};
  return {Verdict::kPromiseViolated, arg_best, best};
}

double verify_certificate(const SiInstance& inst, const Permutation& sigma,
                          int trials, Rng& rng) {
  check_si_shape(inst);
  if (trials < 1) throw std::invalid_argument("need at least one trial");
  if (sigma.degree() != inst.n())
    throw std::invalid_argument("certificate degree mismatch");
  if (!inst.group.contains(sigma)) return 0.0;
  const PureState permuted = apply_perm(sigma, run_pure(inst.circuit0));
  const PureState psi1 = run_pure(inst.circuit1);
  int accepts = 0;
  for (int i = 0; i < trials; ++i)
    if (swap_test_sample(permuted, psi1, rng)) ++accepts;
  return static_cast<double>(accepts) / trials;
}

SsiInstance reduce_gi_to_ssi(const Graph& g, const Graph& h) {
  if (g.n != h.n) throw std::invalid_argument("graphs must share |V|");
  return {graph_state(g).circuit, graph_state(h).circuit,
          PermGroup::symmetric(g.n), std::sqrt(0.5)};
}

DensityMatrix marginal_product(const DensityMatrix& rho) {
  DensityMatrix out = partial_trace(rho, {0});
  for (int q = 1; q < rho.n; ++q)
    out = tensor(out, partial_trace(rho, {q}));
  return out;
}

MsiInstance reduce_productstate_to_msi(const Circuit& q, double epsilon) {
  q.validate();
  if (q.n_in != 2 * q.n_out)
    throw std::invalid_argument("reduction expects a circuit in Q_{2n,n}");
  if (q.n_out > 4)
    throw TooManyQubits("ProductState reduction is limited to n <= 4");
  const DensityMatrix rho = run_mixed(q);
  return MsiInstance{.circuit0 = q,
                     .circuit1 = std::nullopt,
                     .rho0 = rho,
                     .rho1 = marginal_product(rho),
                     .group = PermGroup::symmetric(q.n_out),
                     .epsilon = epsilon};
}

GutoskiReport check_gutoski_bound(const DensityMatrix& rho,
                                  const std::vector<DensityMatrix>& witness) {
  if (static_cast<int>(witness.size()) != rho.n)
    throw std::invalid_argument("witness must have one factor per qubit");
  DensityMatrix product = witness[0];
  for (std::size_t i = 1; i < witness.size(); ++i)
    product = tensor(product, witness[i]);

  GutoskiReport report;
  report.alpha = trace_norm_hermitian(rho.rho - product.rho);
  report.marginal_norm =
      trace_norm_hermitian(rho.rho - marginal_product(rho).rho);
  report.bound = (rho.n + 1) * report.alpha;
  report.holds = report.marginal_norm <= report.bound + kDecisionTol;
  return report;
}

}  // namespace qiso
