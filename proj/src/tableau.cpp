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

#include "qiso/tableau.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

#include "qiso/errors.hpp"

namespace qiso {

namespace {

// Clifford conjugation of one Pauli row, phases tracked exactly in the
// i^p X^x Z^z encoding.
void conjugate_row(PauliString& row, const Gate& g) {
  const int t = g.target;
  switch (g.kind) {
    case GateKind::kH: {
      const bool x = row.x(t), z = row.z(t);
      row.set_phase_exp(row.phase_exp() + 2 * (x && z));
      row.set_x(t, z);
      row.set_z(t, x);
      break;
    }
    case GateKind::kS: {
      const bool x = row.x(t);
      row.set_phase_exp(row.phase_exp() + (x ? 1 : 0));
      row.set_z(t, row.z(t) ^ x);
      break;
    }
    case GateKind::kX:
      row.set_phase_exp(row.phase_exp() + 2 * row.z(t));
      break;
    case GateKind::kZ:
      row.set_phase_exp(row.phase_exp() + 2 * row.x(t));
      break;
    case GateKind::kCnot: {
      const int c = g.control;
      row.set_x(t, row.x(t) ^ row.x(c));
      row.set_z(c, row.z(c) ^ row.z(t));
      break;
    }
    case GateKind::kCz: {
      const int c = g.control;
      const bool xa = row.x(c), xb = row.x(t);
      row.set_phase_exp(row.phase_exp() + 2 * (xa && xb));
      row.set_z(c, row.z(c) ^ xb);
      row.set_z(t, row.z(t) ^ xa);
      break;
    }
    case GateKind::kT:
      throw std::invalid_argument("T is not a Clifford gate");
  }
}

int row_bit(const PauliString& row, int col) {
  const int n = row.n();
  return col < n ? (row.x(col) ? 1 : 0) : (row.z(col - n) ? 1 : 0);
}

// GF(2) reduced row echelon form by exact Pauli row multiplication.
void rref_rows(std::vector<PauliString>& rows) {
  if (rows.empty()) return;
  const int n = rows[0].n();
  std::size_t r = 0;
  for (int col = 0; col < 2 * n && r < rows.size(); ++col) {
    std::size_t pivot = r;
    while (pivot < rows.size() && !row_bit(rows[pivot], col)) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[r], rows[pivot]);
    for (std::size_t q = 0; q < rows.size(); ++q)
      if (q != r && row_bit(rows[q], col)) rows[q] *= rows[r];
    ++r;
  }
}

// GF(2) rank of the bit rows.
int bit_rank(std::vector<std::uint64_t> rows) {
  int rank = 0;
  for (int col = 0; col < 64; ++col) {
    const std::uint64_t mask = std::uint64_t{1} << col;
    std::size_t pivot = rank;
    while (pivot < rows.size() && !(rows[pivot] & mask)) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    for (std::size_t q = 0; q < rows.size(); ++q)
      if (q != static_cast<std::size_t>(rank) && (rows[q] & mask))
        rows[q] ^= rows[rank];
    ++rank;
    if (rank == static_cast<int>(rows.size())) break;
  }
  return rank;
}

void validate_stabilizer_set(const std::vector<PauliString>& rows) {
  if (rows.empty()) throw std::invalid_argument("no stabilizer rows");
  const int n = rows[0].n();
  if (static_cast<int>(rows.size()) != n)
    throw std::invalid_argument("need exactly n stabilizer generators");
  std::vector<std::uint64_t> bits;
  for (const auto& row : rows) {
    if (row.n() != n) throw std::invalid_argument("row length mismatch");
    if (row.letter_sign_exp() % 2 != 0)
      throw std::invalid_argument("stabilizer sign must be real");
    bits.push_back(row.bits());
  }
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = i + 1; j < rows.size(); ++j)
      if (!rows[i].commutes_with(rows[j]))
        throw std::invalid_argument("stabilizer generators must commute");
  if (bit_rank(bits) != n)
    throw std::invalid_argument("stabilizer generators must be independent");
}

}  // namespace

StabilizerTableau StabilizerTableau::zero_state(int n) {
  if (n < 1) throw std::invalid_argument("need n >= 1");
  StabilizerTableau t;
  t.n_ = n;
  for (int q = 0; q < n; ++q) {
    t.destab_.push_back(PauliString::single(n, q, 'X'));
    t.stab_.push_back(PauliString::single(n, q, 'Z'));
  }
  return t;
}

StabilizerTableau StabilizerTableau::from_stabilizers(
    std::vector<PauliString> rows) {
  validate_stabilizer_set(rows);
  StabilizerTableau t;
  t.n_ = rows[0].n();
  t.stab_ = std::move(rows);
  return t;
}

void StabilizerTableau::apply_gate(const Gate& g) {
  if (g.target < 0 || g.target >= n_)
    throw std::invalid_argument("gate target out of range");
  for (auto& row : stab_) conjugate_row(row, g);
  for (auto& row : destab_) conjugate_row(row, g);
}

int StabilizerTableau::measure_z(int qubit, Rng& rng) {
  if (qubit < 0 || qubit >= n_)
    throw std::invalid_argument("qubit index out of range");
  if (!has_destabilizers())
    throw std::invalid_argument(
        "measurement needs a tableau with destabilizers");

  int p = -1;
  for (int i = 0; i < n_; ++i)
    if (stab_[i].x(qubit)) {
      p = i;
      break;
    }

  if (p >= 0) {
    // Z_qubit anticommutes with a stabilizer: random outcome.
    const int outcome = coin(rng) ? 1 : 0;
    const PauliString pivot = stab_[p];
    for (int i = 0; i < n_; ++i) {
      if (i != p && stab_[i].x(qubit)) stab_[i] *= pivot;
      if (i != p && destab_[i].x(qubit)) destab_[i] *= pivot;
    }
    destab_[p] = pivot;
    PauliString fresh = PauliString::single(n_, qubit, 'Z');
    fresh.set_phase_exp(outcome ? 2 : 0);
    stab_[p] = fresh;
    return outcome;
  }

  // Deterministic outcome: +/-Z_qubit is a product of stabilizer rows, with
  // the destabilizer x bits selecting the factors.
  PauliString scratch(n_);
  for (int i = 0; i < n_; ++i)
    if (destab_[i].x(qubit)) scratch *= stab_[i];
  for (int q = 0; q < n_; ++q)
    if (scratch.x(q) || (scratch.z(q) != (q == qubit)))
      throw std::logic_error("deterministic measurement product is not Z_q");
  return scratch.letter_sign_exp() == 2 ? 1 : 0;
}

StabilizerTableau StabilizerTableau::canonical_form() const {
  std::vector<PauliString> rows = stab_;
  rref_rows(rows);
  StabilizerTableau t;
  t.n_ = n_;
  t.stab_ = std::move(rows);
  return t;
}

bool StabilizerTableau::same_state(const StabilizerTableau& other) const {
  if (n_ != other.n_) return false;
  return canonical_form().stab_ == other.canonical_form().stab_;
}

OverlapResult stabilizer_overlap(const StabilizerTableau& a,
                                 const StabilizerTableau& b) {
  if (a.n() != b.n()) throw std::invalid_argument("qubit count mismatch");
  const int n = a.n();

  // Zassenhaus on the (x|z) bit rows: eliminate [A|A; B|0]; leftover rows
  // with zero left half carry a basis of the row-space intersection in the
  // right half.
  struct ZRow {
    std::uint64_t left;
    std::uint64_t right;
  };
  std::vector<ZRow> rows;
  for (int i = 0; i < n; ++i) {
    const std::uint64_t bits = a.stabilizers()[i].bits();
    rows.push_back({bits, bits});
  }
  for (int i = 0; i < n; ++i) rows.push_back({b.stabilizers()[i].bits(), 0});

  std::size_t r = 0;
  for (int col = 0; col < 2 * n && r < rows.size(); ++col) {
    const std::uint64_t mask = std::uint64_t{1} << col;
    std::size_t pivot = r;
    while (pivot < rows.size() && !(rows[pivot].left & mask)) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[r], rows[pivot]);
    for (std::size_t q = r + 1; q < rows.size(); ++q)
      if (rows[q].left & mask) {
        rows[q].left ^= rows[r].left;
        rows[q].right ^= rows[r].right;
      }
    ++r;
  }

  std::vector<std::uint64_t> intersection;
  for (std::size_t q = r; q < rows.size(); ++q)
    if (rows[q].right != 0) intersection.push_back(rows[q].right);

  // Express an intersection element in a generator list and return the exact
  // phase exponent of the corresponding product.
  auto product_phase = [n](const std::vector<PauliString>& gens,
                           std::uint64_t target) {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> echelon;  // bits,set
    for (int i = 0; i < n; ++i)
      echelon.emplace_back(gens[i].bits(), std::uint64_t{1} << i);
    // forward elimination
    std::size_t rank = 0;
    for (int col = 0; col < 2 * n && rank < echelon.size(); ++col) {
      const std::uint64_t mask = std::uint64_t{1} << col;
      std::size_t pivot = rank;
      while (pivot < echelon.size() && !(echelon[pivot].first & mask))
        ++pivot;
      if (pivot == echelon.size()) continue;
      std::swap(echelon[rank], echelon[pivot]);
      for (std::size_t q = rank + 1; q < echelon.size(); ++q)
        if (echelon[q].first & mask) {
          echelon[q].first ^= echelon[rank].first;
          echelon[q].second ^= echelon[rank].second;
        }
      ++rank;
    }
    std::uint64_t residual = target, combo = 0;
    for (const auto& [bits, set] : echelon) {
      if (bits == 0) continue;
      const int lead = std::countr_zero(bits);
      if (residual & (std::uint64_t{1} << lead)) {
        residual ^= bits;
        combo ^= set;
      }
    }
    if (residual != 0)
      throw std::logic_error("intersection element not in row space");
    PauliString prod(n);
    for (int i = 0; i < n; ++i)
      if (combo & (std::uint64_t{1} << i)) prod *= gens[i];
    return prod.letter_sign_exp();
  };

  for (std::uint64_t v : intersection) {
    const int pa = product_phase(a.stabilizers(), v);
    const int pb = product_phase(b.stabilizers(), v);
    if (pa != pb) return {0.0, -1, true};
  }

  const int s = n - static_cast<int>(intersection.size());
  return {std::exp2(-0.5 * s), s, false};
}

std::string description_string(const StabilizerTableau& t) {
  const StabilizerTableau canon = t.canonical_form();
  std::string out;
  for (int i = 0; i < canon.n(); ++i) {
    if (i) out += '|';
    out += canon.stabilizers()[i].to_string();
  }
  return out;
}

std::optional<std::string> description_string_noisy(const StabilizerTableau& t,
                                                    Rng& rng) {
  if (bernoulli(rng, std::exp(-static_cast<double>(t.n()))))
    return std::nullopt;
  return description_string(t);
}

StabilizerTableau tableau_from_description(std::string_view text) {
  std::vector<PauliString> rows;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('|', start);
    if (end == std::string_view::npos) end = text.size();
    auto row = PauliString::parse(text.substr(start, end - start));
    if (!row) throw std::invalid_argument("bad generator description");
    rows.push_back(*row);
    start = end + 1;
    if (end == text.size()) break;
  }
  return StabilizerTableau::from_stabilizers(std::move(rows));
}

GraphStatePrep graph_state(const Graph& g) {
  std::vector<std::vector<int>> neighbors(g.n);
  for (const auto& [a, b] : g.edges) {
    neighbors[a].push_back(b);
    neighbors[b].push_back(a);
  }
  std::vector<PauliString> rows;
  for (int v = 0; v < g.n; ++v) {
    PauliString k(g.n);
    k.set_x(v, true);
    for (int w : neighbors[v]) k.set_z(w, true);
    rows.push_back(k);
  }
  Circuit c;
  c.n_in = c.n_out = g.n;
  for (int q = 0; q < g.n; ++q) c.gates.push_back({GateKind::kH, q});
  for (const auto& [a, b] : g.edges) c.gates.push_back({GateKind::kCz, b, a});
  return {StabilizerTableau::from_stabilizers(std::move(rows)), std::move(c)};
}

StabilizerTableau permute_qubits(const StabilizerTableau& t,
                                 const Permutation& sigma) {
  if (sigma.degree() != t.n())
    throw std::invalid_argument("permutation degree mismatch");
  std::vector<PauliString> rows;
  rows.reserve(t.stabilizers().size());
  for (const auto& row : t.stabilizers()) rows.push_back(row.permuted(sigma));
  return StabilizerTableau::from_stabilizers(std::move(rows))
      .canonical_form();
}

PureState to_statevector(const StabilizerTableau& t) {
  const int n = t.n();
  if (n > kMaxDenseQubits)
    throw TooManyQubits("statevector conversion exceeds the dense limit");
  const StabilizerTableau canon = t.canonical_form();

  // The support of the state is the affine space cut out by the Z-only
  // generators; solve for one member.
  std::vector<std::pair<std::uint64_t, int>> constraints;  // z-mask, rhs
  for (const auto& row : canon.stabilizers()) {
    bool has_x = false;
    for (int q = 0; q < n; ++q) has_x = has_x || row.x(q);
    if (has_x) continue;
    std::uint64_t mask = 0;
    for (int q = 0; q < n; ++q)
      if (row.z(q)) mask |= std::uint64_t{1} << q;  // variable index = qubit
    constraints.emplace_back(mask, row.letter_sign_exp() == 2 ? 1 : 0);
  }
  std::uint64_t x0_vars = 0;
  {
    std::size_t rank = 0;
    std::vector<int> pivot_var;
    for (int var = 0; var < n && rank < constraints.size(); ++var) {
      const std::uint64_t mask = std::uint64_t{1} << var;
      std::size_t pivot = rank;
      while (pivot < constraints.size() && !(constraints[pivot].first & mask))
        ++pivot;
      if (pivot == constraints.size()) continue;
      std::swap(constraints[rank], constraints[pivot]);
      for (std::size_t q = 0; q < constraints.size(); ++q)
        if (q != rank && (constraints[q].first & mask)) {
          constraints[q].first ^= constraints[rank].first;
          constraints[q].second ^= constraints[rank].second;
        }
      pivot_var.push_back(var);
      ++rank;
    }
    for (std::size_t i = rank; i < constraints.size(); ++i)
      if (constraints[i].second != 0)
        throw std::logic_error("inconsistent stabilizer constraints");
    // free variables zero; pivot variables forced by the rhs
    for (std::size_t i = 0; i < rank; ++i)
      if (constraints[i].second)
        x0_vars |= std::uint64_t{1} << pivot_var[i];
  }
  std::uint64_t index = 0;  // qubit q holds bit n-1-q of the basis index
  for (int q = 0; q < n; ++q)
    if (x0_vars & (std::uint64_t{1} << q)) index |= std::uint64_t{1} << (n - 1 - q);

  PureState v = PureState::basis(n, index);
  for (const auto& row : canon.stabilizers()) {
    PureState gv = row.apply(v);
    v.amps = 0.5 * (v.amps + gv.amps);
  }
  const double norm = v.norm();
  if (norm < 1e-12)
    throw std::logic_error("projector annihilated the seed basis state");
  v.amps /= norm;
  return v;
}

StabilizerTableau random_stabilizer(int n, Rng& rng) {
  StabilizerTableau t = StabilizerTableau::zero_state(n);
  const int gate_count = 3 * n * n + 8;
  Circuit c = random_pure_circuit(n, gate_count, rng, /*clifford_only=*/true);
  for (const auto& g : c.gates) t.apply_gate(g);
  return t;
}

StabilizerTableau run_stabilizer(const Circuit& c) {
  c.validate();
  if (c.n_in != c.n_out)
    throw std::invalid_argument("stabilizer run requires n_in == n_out");
  if (!c.is_clifford())
    throw std::invalid_argument("circuit contains non-Clifford gates");
  StabilizerTableau t = StabilizerTableau::zero_state(c.n_in);
  for (const auto& g : c.gates) t.apply_gate(g);
  return t;
}

bool valid_tableau(const StabilizerTableau& t) {
  try {
    validate_stabilizer_set(t.stabilizers());
  } catch (const std::invalid_argument&) {
    return false;
  }
  if (t.has_destabilizers()) {
    const int n = t.n();
    for (int i = 0; i < n; ++i) {
      if (t.destabilizers()[i].commutes_with(t.stabilizers()[i])) return false;
      for (int j = 0; j < n; ++j)
        if (j != i &&
            !t.destabilizers()[i].commutes_with(t.stabilizers()[j]))
          return false;
    }
  }
  return true;
}

}  // namespace qiso
