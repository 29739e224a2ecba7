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

#include "qiso/pauli.hpp"

#include <stdexcept>

namespace qiso {

PauliString::PauliString(int n) : x_(n, 0), z_(n, 0) {
  if (n < 1) throw std::invalid_argument("PauliString needs n >= 1");
}

PauliString PauliString::single(int n, int qubit, char letter) {
  PauliString p(n);
  if (qubit < 0 || qubit >= n)
    throw std::invalid_argument("qubit index out of range");
  switch (letter) {
    case 'X': p.x_[qubit] = 1; break;
    case 'Z': p.z_[qubit] = 1; break;
    case 'Y':
      p.x_[qubit] = 1;
      p.z_[qubit] = 1;
      p.phase_exp_ = 1;  // Y = i X Z
      break;
    default: throw std::invalid_argument("letter must be X, Y or Z");
  }
  return p;
}

bool PauliString::is_identity_word() const {
  for (int q = 0; q < n(); ++q)
    if (x_[q] || z_[q]) return false;
  return true;
}

PauliString& PauliString::operator*=(const PauliString& other) {
  if (n() != other.n()) throw std::invalid_argument("Pauli length mismatch");
  int phase = phase_exp_ + other.phase_exp_;
  for (int q = 0; q < n(); ++q) {
    // Z^z X^x' = (-1)^{z x'} X^x' Z^z when moving our Z past their X.
    phase += 2 * (z_[q] & other.x_[q]);
    x_[q] ^= other.x_[q];
    z_[q] ^= other.z_[q];
  }
  set_phase_exp(phase);
  return *this;
}

bool PauliString::commutes_with(const PauliString& other) const {
  if (n() != other.n()) throw std::invalid_argument("Pauli length mismatch");
  int sym = 0;
  for (int q = 0; q < n(); ++q)
    sym ^= (x_[q] & other.z_[q]) ^ (z_[q] & other.x_[q]);
  return sym == 0;
}

char PauliString::letter(int q) const {
  if (x_[q] && z_[q]) return 'Y';
  if (x_[q]) return 'X';
  if (z_[q]) return 'Z';
  return 'I';
}

int PauliString::letter_sign_exp() const {
  int ys = 0;
  for (int q = 0; q < n(); ++q) ys += x_[q] & z_[q];
  return ((phase_exp_ - ys) % 4 + 4) % 4;
}

std::string PauliString::to_string() const {
  const int e = letter_sign_exp();
  if (e % 2 != 0)
    throw std::logic_error("Pauli word has imaginary displayed sign");
  std::string out(1, e == 0 ? '+' : '-');
  for (int q = 0; q < n(); ++q) out += letter(q);
  return out;
}

std::optional<PauliString> PauliString::parse(std::string_view text) {
  if (text.size() < 2) return std::nullopt;
  if (text[0] != '+' && text[0] != '-') return std::nullopt;
  PauliString p(static_cast<int>(text.size()) - 1);
  int ys = 0;
  for (int q = 0; q + 1 < static_cast<int>(text.size()); ++q) {
    switch (text[q + 1]) {
      case 'I': break;
      case 'X': p.x_[q] = 1; break;
      case 'Z': p.z_[q] = 1; break;
      case 'Y':
        p.x_[q] = 1;
        p.z_[q] = 1;
        ++ys;
        break;
      default: return std::nullopt;
    }
  }
  p.set_phase_exp(ys + (text[0] == '-' ? 2 : 0));
  return p;
}

std::uint64_t PauliString::bits() const {
  if (n() > 32) throw std::invalid_argument("bit packing supports n <= 32");
  std::uint64_t b = 0;
  for (int q = 0; q < n(); ++q) {
    if (x_[q]) b |= std::uint64_t{1} << q;
    if (z_[q]) b |= std::uint64_t{1} << (n() + q);
  }
  return b;
}

PauliString PauliString::permuted(const Permutation& sigma) const {
  if (sigma.degree() != n())
    throw std::invalid_argument("permutation degree mismatch");
  PauliString out(n());
  out.phase_exp_ = phase_exp_;
  for (int q = 0; q < n(); ++q) {
    out.x_[q] = x_[sigma(q)];
    out.z_[q] = z_[sigma(q)];
  }
  return out;
}

PureState PauliString::apply(const PureState& psi) const {
  if (psi.n != n()) throw std::invalid_argument("state dimension mismatch");
  static const Complex kPhases[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  const std::int64_t dim = dim_of(n());
  std::uint64_t flip = 0;
  for (int q = 0; q < n(); ++q)
    if (x_[q]) flip |= std::uint64_t{1} << (n() - 1 - q);

  PureState out;
  out.n = psi.n;
  out.amps = Vector(dim);
  for (std::int64_t b = 0; b < dim; ++b) {
    int zb = 0;
    for (int q = 0; q < n(); ++q)
      zb ^= z_[q] & qubit_bit(static_cast<std::uint64_t>(b), q, n());
    const Complex coeff = kPhases[(phase_exp_ + 2 * zb) % 4];
    out.amps[static_cast<std::int64_t>(b ^ static_cast<std::int64_t>(flip))] =
        coeff * psi.amps[b];
  }
  return out;
}

}  // namespace qiso
