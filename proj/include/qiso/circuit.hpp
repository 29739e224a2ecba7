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

#include <string>
#include <vector>

#include "qiso/permutation.hpp"
#include "qiso/state.hpp"

namespace qiso {

// H, T and CNOT make the set universal; dropping T leaves the
// stabilizer-closed subset shared with the tableau engine.
enum class GateKind { kH, kS, kT, kX, kZ, kCnot, kCz };

struct Gate {
  GateKind kind;
  int target = 0;    // 0-based qubit
  int control = -1;  // set for CNOT/CZ; CZ is symmetric in control/target

  bool operator==(const Gate&) const = default;
};

bool is_clifford_gate(GateKind kind);
std::string gate_name(GateKind kind);
GateKind gate_kind_from_name(const std::string& name);

/// Gate list over n_in qubits; the last n_in - n_out qubits are the
/// traced-out tail of a mixed-state circuit.  n_in == n_out is the pure case.
struct Circuit {
  int n_in = 0;
  int n_out = 0;
  std::vector<Gate> gates;

  void validate() const;  // throws std::invalid_argument on bad indices
  bool is_clifford() const;

  bool operator==(const Circuit&) const = default;
};

void apply_gate(PureState& psi, const Gate& g);

/// Runs the circuit on |0...0>; requires n_in == n_out <= 12.
PureState run_pure(const Circuit& c);

/// Runs the circuit on |0...0> and traces out the tail qubits;
/// requires n_out < n_in <= 12.
DensityMatrix run_mixed(const Circuit& c);

Circuit random_pure_circuit(int n, int gate_count, Rng& rng,
                            bool clifford_only);

/// Gate realization of the subsystem permutation P_sigma: each transposition
/// becomes a SWAP spelled as three CNOTs.  Appending these gates to a circuit
/// multiplies its output state by P_sigma.
std::vector<Gate> permutation_as_swaps(const Permutation& sigma);

}  // namespace qiso
