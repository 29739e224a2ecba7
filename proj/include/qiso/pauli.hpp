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
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qiso/permutation.hpp"
#include "qiso/state.hpp"

namespace qiso {

/// Element of the n-qubit Pauli group, stored as
///   i^phase_exp * prod_j X_j^{x_j} Z_j^{z_j}.
/// In this encoding multiplication adds phase exponents plus a factor
/// (-1)^(z . x') from reordering Z past X, and no other bookkeeping.
/// The conventional letter form (sign times a word over I,X,Y,Z) differs by
/// one factor of i per Y, since Y = i X Z.
class PauliString {
 public:
  PauliString() = default;
  explicit PauliString(int n);  // identity on n qubits

  static PauliString single(int n, int qubit, char letter);  // 'X','Y','Z'

  int n() const { return static_cast<int>(x_.size()); }
  bool x(int q) const { return x_[q] != 0; }
  bool z(int q) const { return z_[q] != 0; }
  void set_x(int q, bool v) { x_[q] = v ? 1 : 0; }
  void set_z(int q, bool v) { z_[q] = v ? 1 : 0; }
  int phase_exp() const { return phase_exp_; }
  void set_phase_exp(int p) { phase_exp_ = ((p % 4) + 4) % 4; }

  bool is_identity_word() const;  // all x and z bits clear (any phase)

  PauliString& operator*=(const PauliString& other);
  friend PauliString operator*(PauliString a, const PauliString& b) {
    a *= b;
    return a;
  }

  bool commutes_with(const PauliString& other) const;

  char letter(int q) const;  // 'I','X','Y','Z'
  /// Exponent e with the operator equal to i^e times its letter word;
  /// e is even exactly when the displayed sign is real.
  int letter_sign_exp() const;
  /// "+XYZ" or "-ZZI"; requires a real displayed sign.
  std::string to_string() const;
  static std::optional<PauliString> parse(std::string_view text);

  /// x bits in [0, n), z bits in [n, 2n); for GF(2) linear algebra, n <= 32.
  std::uint64_t bits() const;

  /// Tensor factors permuted: factor at position q becomes the old factor at
  /// sigma(q); phase exponent unchanged.
  PauliString permuted(const Permutation& sigma) const;

  /// Dense action on a state vector.
  PureState apply(const PureState& psi) const;

  bool operator==(const PauliString&) const = default;

 private:
  std::vector<std::uint8_t> x_, z_;
  int phase_exp_ = 0;  // mod 4
};

}  // namespace qiso
