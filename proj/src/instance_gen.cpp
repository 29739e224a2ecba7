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

#include "qiso/instance_gen.hpp"

#include <algorithm>
#include <stdexcept>

#include "qiso/errors.hpp"

namespace qiso {

namespace {

// Basis-state preparation with a sprinkle of phase gates: X on a weight-w
// subset keeps the state a computational basis vector, so instances built
// from different weights have orthogonal states under every qubit
// permutation.
Circuit basis_weight_circuit(int n_wires, int n_out, int weight, Rng& rng) {
  Circuit c;
  c.n_in = n_wires;
  c.n_out = n_out;
  std::vector<int> wires(n_out);
  for (int i = 0; i < n_out; ++i) wires[i] = i;
  for (int i = 0; i < weight; ++i) {
    const int pick = i + uniform_int(rng, n_out - i);
    std::swap(wires[i], wires[pick]);
    c.gates.push_back({GateKind::kX, wires[i]});
  }
  for (int i = 0; i < n_out; ++i)
    if (coin(rng)) c.gates.push_back({GateKind::kZ, uniform_int(rng, n_out)});
  return c;
}

void append_permutation(Circuit& c, const Permutation& sigma) {
  for (const auto& g : permutation_as_swaps(sigma)) c.gates.push_back(g);
}

}  // namespace

Flavor flavor_from_string(const std::string& s) {
  if (s == "yes") return Flavor::kYes;
  if (s == "no") return Flavor::kNo;
  if (s == "random") return Flavor::kRandom;
  throw std::invalid_argument("flavor must be yes, no or random");
}

SiInstance gen_si(int n, Flavor flavor, std::uint64_t seed, int max_retries) {
  if (n < 1 || n > kMaxDenseQubits)
    throw TooManyQubits("SI generation needs 1 <= n <= 12");
  for (int attempt = 0; attempt < max_retries; ++attempt) {
    Rng rng = make_rng(derive_seed(seed, attempt));
    const int gate_count = 3 * n + 6;
    SiInstance inst{Circuit{}, Circuit{}, PermGroup::symmetric(n), 0.0};
    switch (flavor) {
      case Flavor::kYes: {
        inst.circuit0 = random_pure_circuit(n, gate_count, rng, false);
        inst.circuit1 = inst.circuit0;
        append_permutation(inst.circuit1, inst.group.sample_uniform(rng));
        break;
      }
      case Flavor::kNo: {
        const int w0 = uniform_int(rng, n + 1);
        int w1;
        do {
          w1 = uniform_int(rng, n + 1);
        } while (w1 == w0);
        inst.circuit0 = basis_weight_circuit(n, n, w0, rng);
        inst.circuit1 = basis_weight_circuit(n, n, w1, rng);
        break;
      }
      case Flavor::kRandom: {
        inst.circuit0 = random_pure_circuit(n, gate_count, rng, false);
        inst.circuit1 = random_pure_circuit(n, gate_count, rng, false);
        return inst;
      }
    }
    const Verdict want =
        flavor == Flavor::kYes ? Verdict::kYes : Verdict::kNo;
    if (decide_si(inst).verdict == want) return inst;
  }
  throw std::runtime_error("instance generation exhausted its retries");
}

SsiInstance gen_ssi(int n, Flavor flavor, std::uint64_t seed,
                    int max_retries) {
  if (n < 1 || n > kMaxDenseQubits)
    throw TooManyQubits("SSI generation needs 1 <= n <= 12");
  for (int attempt = 0; attempt < max_retries; ++attempt) {
    Rng rng = make_rng(derive_seed(seed, attempt));
    const int gate_count = 3 * n + 6;
    SsiInstance inst{Circuit{}, Circuit{}, PermGroup::symmetric(n), 0.0};
    switch (flavor) {
      case Flavor::kYes: {
        inst.circuit0 = random_pure_circuit(n, gate_count, rng, true);
        inst.circuit1 = inst.circuit0;
        append_permutation(inst.circuit1, inst.group.sample_uniform(rng));
        break;
      }
      case Flavor::kNo: {
        const int w0 = uniform_int(rng, n + 1);
        int w1;
        do {
          w1 = uniform_int(rng, n + 1);
        } while (w1 == w0);
        inst.circuit0 = basis_weight_circuit(n, n, w0, rng);
        inst.circuit1 = basis_weight_circuit(n, n, w1, rng);
        break;
      }
      case Flavor::kRandom: {
        inst.circuit0 = random_pure_circuit(n, gate_count, rng, true);
        inst.circuit1 = random_pure_circuit(n, gate_count, rng, true);
        return inst;
      }
    }
    const Verdict want =
        flavor == Flavor::kYes ? Verdict::kYes : Verdict::kNo;
    if (decide_ssi(inst).verdict == want) return inst;
  }
  throw std::runtime_error("instance generation exhausted its retries");
}

MsiInstance gen_msi(int n, Flavor flavor, std::uint64_t seed,
                    int max_retries) {
  if (n < 1 || n > 4)
    throw TooManyQubits("MSI generation is capped at n <= 4");
  for (int attempt = 0; attempt < max_retries; ++attempt) {
    Rng rng = make_rng(derive_seed(seed, attempt));
    const int gate_count = 5 * n + 6;
    MsiInstance inst{.circuit0 = std::nullopt,
                     .circuit1 = std::nullopt,
                     .rho0 = std::nullopt,
                     .rho1 = std::nullopt,
                     .group = PermGroup::symmetric(n),
                     .epsilon = 0.0};
    switch (flavor) {
      case Flavor::kYes: {
        Circuit c0 = random_pure_circuit(2 * n, gate_count, rng, false);
        c0.n_out = n;
        Circuit c1 = c0;
        // Permute only the kept wires; the tail is discarded anyway.
        Permutation tau = inst.group.sample_uniform(rng);
        std::vector<int> wide(2 * n);
        for (int i = 0; i < n; ++i) wide[i] = tau(i);
        for (int i = n; i < 2 * n; ++i) wide[i] = i;
        append_permutation(c1, Permutation(wide));
        inst.circuit0 = std::move(c0);
        inst.circuit1 = std::move(c1);
        break;
      }
      case Flavor::kNo: {
        const int w0 = uniform_int(rng, n + 1);
        int w1;
        do {
          w1 = uniform_int(rng, n + 1);
        } while (w1 == w0);
        inst.circuit0 = basis_weight_circuit(2 * n, n, w0, rng);
        inst.circuit1 = basis_weight_circuit(2 * n, n, w1, rng);
        break;
      }
      case Flavor::kRandom: {
        Circuit c0 = random_pure_circuit(2 * n, gate_count, rng, false);
        c0.n_out = n;
        Circuit c1 = random_pure_circuit(2 * n, gate_count, rng, false);
        c1.n_out = n;
        inst.circuit0 = std::move(c0);
        inst.circuit1 = std::move(c1);
        return inst;
      }
    }
    const Verdict want =
        flavor == Flavor::kYes ? Verdict::kYes : Verdict::kNo;
    if (decide_msi(inst).verdict == want) return inst;
  }
  throw std::runtime_error("instance generation exhausted its retries");
}

std::pair<Graph, Graph> gen_graph_pair(int n, Flavor flavor,
                                       std::uint64_t seed, int max_retries) {
  if (n < 1 || n > 8)
    throw std::invalid_argument("graph pairs support 1 <= n <= 8");
  for (int attempt = 0; attempt < max_retries; ++attempt) {
    Rng rng = make_rng(derive_seed(seed, attempt));
    Graph g = random_graph(n, 0.5, rng);
    switch (flavor) {
      case Flavor::kYes: {
        Permutation sigma = PermGroup::symmetric(n).sample_uniform(rng);
        return {g, relabel(g, sigma)};
      }
      case Flavor::kNo: {
        Graph h = random_graph(n, 0.5, rng);
        if (!graph_iso_bruteforce(g, h)) return {g, h};
        break;
      }
      case Flavor::kRandom:
        return {g, random_graph(n, 0.5, rng)};
    }
  }
  throw std::runtime_error("instance generation exhausted its retries");
}

}  // namespace qiso
