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
#include <string>
#include <string_view>
#include <vector>

#include "qiso/circuit.hpp"
#include "qiso/graph.hpp"
#include "qiso/pauli.hpp"
#include "qiso/permutation.hpp"
#include "qiso/rng.hpp"
#include "qiso/state.hpp"

namespace qiso {

/// Stabilizer state as n commuting, independent Pauli generators with real
/// signs.  Tableaux built by circuit simulation also carry the destabilizer
/// rows needed for measurement; derived tableaux (canonical forms, parsed
/// descriptions) are generator-only.
class StabilizerTableau {
 public:
  /// |0...0> with destabilizers {X_i} and stabilizers {Z_i}.
  static StabilizerTableau zero_state(int n);
  /// Generator-only tableau; validates commutation, independence and signs.
  static StabilizerTableau from_stabilizers(std::vector<PauliString> rows);

  int n() const { return n_; }
  const std::vector<PauliString>& stabilizers() const { return stab_; }
  const std::vector<PauliString>& destabilizers() const { return destab_; }
  bool has_destabilizers() const { return !destab_.empty(); }

  /// Conjugates every row by the gate.  Throws on non-Clifford gates (T).
  void apply_gate(const Gate& g);

  /// Z-basis measurement of a qubit (0-based).  Deterministic when +/-Z_q is
  /// in the stabilizer group, otherwise a fresh coin; the tableau is updated
  /// in place.  Requires destabilizers.
  int measure_z(int qubit, Rng& rng);

  /// Unique generator-only representative: GF(2) reduced row echelon form of
  /// the (x|z) matrix with columns x_1..x_n z_1..z_n, phases recomputed by
  /// exact Pauli row operations.  Equal states yield identical results.
  StabilizerTableau canonical_form() const;

  bool same_state(const StabilizerTableau& other) const;

 private:
  StabilizerTableau() = default;
  int n_ = 0;
  std::vector<PauliString> stab_;
  std::vector<PauliString> destab_;
};

struct OverlapResult {
  double value = 0.0;        // |<a|b>|
  int mismatch_count = -1;   // s with value == 2^{-s/2}; -1 when orthogonal
  bool orthogonal = false;
};

/// Exact overlap of two stabilizer states: 0 on a sign contradiction, else
/// 2^{-s/2} where s = n - log2 |S(a) ∩ S(b)|.
OverlapResult stabilizer_overlap(const StabilizerTableau& a,
                                 const StabilizerTableau& b);

/// Canonical classical description: canonical generators joined by "|", each
/// a sign character plus n letters from {I,X,Y,Z}.  This format is a wire
/// contract; protocols compare these strings bit-exactly.
std::string description_string(const StabilizerTableau& t);

/// Same, but fails (returns nullopt) with probability e^{-n}, mirroring a
/// measurement-based description procedure instead of white-box readout.
std::optional<std::string> description_string_noisy(const StabilizerTableau& t,
                                                    Rng& rng);

StabilizerTableau tableau_from_description(std::string_view text);

struct GraphStatePrep {
  StabilizerTableau tableau;  // generators K_v = X_v prod_{w in N(v)} Z_w
  Circuit circuit;            // H on every qubit, then one CZ per edge
};
GraphStatePrep graph_state(const Graph& g);

/// Qubit permutation: factor at position q becomes the old factor at
/// sigma(q), then recanonicalized.  Densely this is P_sigma up to phase.
StabilizerTableau permute_qubits(const StabilizerTableau& t,
                                 const Permutation& sigma);

/// Unit vector fixed by every generator (global phase unspecified).
PureState to_statevector(const StabilizerTableau& t);

/// State of a random Clifford circuit with Theta(n^2) gates on |0...0>.
StabilizerTableau random_stabilizer(int n, Rng& rng);

/// Runs a Clifford circuit on |0...0>; requires n_in == n_out.
StabilizerTableau run_stabilizer(const Circuit& c);

/// Invariant check used by tests: commuting, independent, real signs, and
/// destabilizer pairing when present.
bool valid_tableau(const StabilizerTableau& t);

}  // namespace qiso
