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

#include "qiso/circuit.hpp"

#include <cmath>
#include <stdexcept>

#include "qiso/errors.hpp"

namespace qiso {

bool is_clifford_gate(GateKind kind) { return kind != GateKind::kT; }

std::string gate_name(GateKind kind) {
  switch (kind) {
    case GateKind::kH: return "H";
    case GateKind::kS: return "S";
    case GateKind::kT: return "T";
    case GateKind::kX: return "X";
    case GateKind::kZ: return "Z";
    case GateKind::kCnot: return "CNOT";
    case GateKind::kCz: return "CZ";
  }
  throw std::logic_error("unreachable");
}

GateKind gate_kind_from_name(const std::string& name) {
  if (name == "H") return GateKind::kH;
  if (name == "S") return GateKind::kS;
  if (name == "T") return GateKind::kT;
  if (name == "X") return GateKind::kX;
  if (name == "Z") return GateKind::kZ;
  if (name == "CNOT") return GateKind::kCnot;
  if (name == "CZ") return GateKind::kCz;
  throw std::invalid_argument("unknown gate name: " + name);
}

namespace {

bool is_two_qubit(GateKind kind) {
  return kind == GateKind::kCnot || kind == GateKind::kCz;
}

}  // namespace

void Circuit::validate() const {
  if (n_in < 1 || n_out < 1 || n_out > n_in)
    throw std::invalid_argument("need 1 <= n_out <= n_in");
  for (const auto& g : gates) {
    if (g.target < 0 || g.target >= n_in)
      throw std::invalid_argument("gate target out of range");
    if (is_two_qubit(g.kind)) {
      if (g.control < 0 || g.control >= n_in || g.control == g.target)
        throw std::invalid_argument("bad control index");
    }
  }
}

bool Circuit::is_clifford() const {
  for (const auto& g : gates)
    if (!is_clifford_gate(g.kind)) return false;
  return true;
}

void apply_gate(PureState& psi, const Gate& g) {
  const int n = psi.n;
  const std::int64_t dim = dim_of(n);
  const std::int64_t tmask = std::int64_t{1} << (n - 1 - g.target);
  static const double kInvSqrt2 = 1.0 / std::sqrt(2.0);
  static const Complex kI(0.0, 1.0);
  static const Complex kT = std::polar(1.0, M_PI / 4.0);

  switch (g.kind) {
    case GateKind::kH:
      for (std::int64_t x = 0; x < dim; ++x) {
        if (x & tmask) continue;
        const Complex a0 = psi.amps[x], a1 = psi.amps[x | tmask];
        psi.amps[x] = (a0 + a1) * kInvSqrt2;
        psi.amps[x | tmask] = (a0 - a1) * kInvSqrt2;
      }
      break;
    case GateKind::kS:
      for (std::int64_t x = 0; x < dim; ++x)
        if (x & tmask) psi.amps[x] *= kI;
      break;
    case GateKind::kT:
      for (std::int64_t x = 0; x < dim; ++x)
        if (x & tmask) psi.amps[x] *= kT;
      break;
    case GateKind::kX:
      for (std::int64_t x = 0; x < dim; ++x)
        if (!(x & tmask)) std::swap(psi.amps[x], psi.amps[x | tmask]);
      break;
    case GateKind::kZ:
      for (std::int64_t x = 0; x < dim; ++x)
        if (x & tmask) psi.amps[x] = -psi.amps[x];
      break;
    case GateKind::kCnot: {
      const std::int64_t cmask = std::int64_t{1} << (n - 1 - g.control);
      for (std::int64_t x = 0; x < dim; ++x)
        if ((x & cmask) && !(x & tmask))
          std::swap(psi.amps[x], psi.amps[x | tmask]);
      break;
    }
    case GateKind::kCz: {
      const std::int64_t cmask = std::int64_t{1} << (n - 1 - g.control);
      for (std::int64_t x = 0; x < dim; ++x)
        if ((x & cmask) && (x & tmask)) psi.amps[x] = -psi.amps[x];
      break;
    }
  }
}

PureState run_pure(const Circuit& c) {
  c.validate();
  if (c.n_in != c.n_out)
    throw std::invalid_argument("run_pure requires n_in == n_out");
  if (c.n_in > kMaxDenseQubits)
    throw TooManyQubits("circuit is wider than the dense limit");
  PureState psi = PureState::zero(c.n_in);
  for (const auto& g : c.gates) apply_gate(psi, g);
  return psi;
}

DensityMatrix run_mixed(const Circuit& c) {
  c.validate();
  if (c.n_out >= c.n_in)
    throw std::invalid_argument("run_mixed requires n_out < n_in");
  if (c.n_in > kMaxDenseQubits)
    throw TooManyQubits("circuit is wider than the dense limit");

  Circuit pure = c;
  pure.n_out = pure.n_in;
  PureState psi = run_pure(pure);

  // The tail qubits are the least significant index bits, so the reduced
  // state is M M^dagger for the row-major reshape of the amplitudes.
  const std::int64_t rows = dim_of(c.n_out);
  const std::int64_t cols = dim_of(c.n_in - c.n_out);
  Eigen::Map<
      Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>
      m(psi.amps.data(), rows, cols);
  DensityMatrix out;
  out.n = c.n_out;
  out.rho = m * m.adjoint();
  return out;
}

Circuit random_pure_circuit(int n, int gate_count, Rng& rng,
                            bool clifford_only) {
  static const GateKind kAll[] = {GateKind::kH,    GateKind::kS,
                                  GateKind::kT,    GateKind::kX,
                                  GateKind::kZ,    GateKind::kCnot,
                                  GateKind::kCz};
  static const GateKind kCliff[] = {GateKind::kH,    GateKind::kS,
                                    GateKind::kX,    GateKind::kZ,
                                    GateKind::kCnot, GateKind::kCz};
  Circuit c;
  c.n_in = c.n_out = n;
  for (int i = 0; i < gate_count; ++i) {
    GateKind kind = clifford_only ? kCliff[uniform_int(rng, 6)]
                                  : kAll[uniform_int(rng, 7)];
    Gate g;
    g.kind = kind;
    g.target = uniform_int(rng, n);
    if (kind == GateKind::kCnot || kind == GateKind::kCz) {
      if (n < 2) {  // no two-qubit gates on a single wire
        g.kind = GateKind::kH;
      } else {
        do {
          g.control = uniform_int(rng, n);
        } while (g.control == g.target);
      }
    }
    c.gates.push_back(g);
  }
  return c;
}

std::vector<Gate> permutation_as_swaps(const Permutation& sigma) {
  // sigma = t1 . t2 . ... . tm over its cycles; applying the SWAPs for
  // t1, t2, ... in that order multiplies the state by P_sigma.
  std::vector<Gate> gates;
  const int n = sigma.degree();
  std::vector<bool> done(n, false);
  auto swap_gates = [&gates](int a, int b) {
    gates.push_back({GateKind::kCnot, b, a});
    gates.push_back({GateKind::kCnot, a, b});
    gates.push_back({GateKind::kCnot, b, a});
  };
  for (int start = 0; start < n; ++start) {
    if (done[start] || sigma(start) == start) continue;
    std::vector<int> cycle;
    int j = start;
    while (!done[j]) {
      done[j] = true;
      cycle.push_back(j);
      j = sigma(j);
    }
    for (std::size_t i = 0; i + 1 < cycle.size(); ++i)
      swap_gates(cycle[i], cycle[i + 1]);
  }
  return gates;
}

}  // namespace qiso
