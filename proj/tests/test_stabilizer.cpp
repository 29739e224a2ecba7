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

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>

#include "qiso/qsim.hpp"
#include "qiso/tableau.hpp"
#include "test_util.hpp"

using namespace qiso;
using qiso::testutil::all_graphs;

namespace {

StabilizerTableau from_strings(std::initializer_list<const char*> rows) {
  std::vector<PauliString> parsed;
  for (const char* r : rows) parsed.push_back(*PauliString::parse(r));
  return StabilizerTableau::from_stabilizers(std::move(parsed));
}

// |<a|b>| via the dense bridge.
double dense_overlap(const StabilizerTableau& a, const StabilizerTableau& b) {
  return std::abs(inner_product(to_statevector(a), to_statevector(b)));
}

}  // namespace

TEST_CASE("pauli string algebra") {
  const auto x = PauliString::single(1, 0, 'X');
  const auto y = PauliString::single(1, 0, 'Y');
  const auto z = PauliString::single(1, 0, 'Z');
  const auto xy = x * y;
  CHECK(xy.letter(0) == 'Z');
  CHECK(xy.letter_sign_exp() == 1);  // XY = iZ
  CHECK((y * x).letter_sign_exp() == 3);  // YX = -iZ
  CHECK((x * z * x).to_string() == "-Z");
  CHECK(x.commutes_with(x));
  CHECK_FALSE(x.commutes_with(z));
  CHECK((x * x).is_identity_word());

  const auto parsed = PauliString::parse("-XIZY");
  REQUIRE(parsed.has_value());
  CHECK(parsed->to_string() == "-XIZY");
  CHECK_FALSE(PauliString::parse("XZ").has_value());
  CHECK_FALSE(PauliString::parse("+AB").has_value());
}

TEST_CASE("pauli dense action matches the tableau semantics") {
  Rng rng = make_rng(17);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 1 + uniform_int(rng, 3);
    PauliString p(n);
    for (int q = 0; q < n; ++q) {
      p.set_x(q, coin(rng));
      p.set_z(q, coin(rng));
    }
    if (p.letter_sign_exp() % 2 != 0) p.set_phase_exp(p.phase_exp() + 1);
    const PureState psi = testutil::random_state(n, rng);
    const PureState twice = p.apply(p.apply(psi));
    CHECK((twice.amps - psi.amps).norm() < 1e-9);  // P^2 = I for real signs
  }
}

TEST_CASE("clifford conjugation") {
  // H: |0> -> |+>, i.e. {+Z} -> {+X}.
  StabilizerTableau t = StabilizerTableau::zero_state(1);
  t.apply_gate({GateKind::kH, 0});
  CHECK(description_string(t) == "+X");

  // CNOT on {ZI, IZ} -> {ZI, ZZ}: conjugating each generator by hand gives
  // Z_c -> Z_c and Z_t -> Z_c Z_t.
  StabilizerTableau two = StabilizerTableau::zero_state(2);
  two.apply_gate({GateKind::kCnot, 1, 0});
  CHECK(two.stabilizers()[0].to_string() == "+ZI");
  CHECK(two.stabilizers()[1].to_string() == "+ZZ");

  // S twice turns {+X} into {-X} (S^2 = Z and ZXZ = -X), cross-checked
  // against the dense simulator.
  StabilizerTableau sx = StabilizerTableau::zero_state(1);
  sx.apply_gate({GateKind::kH, 0});
  sx.apply_gate({GateKind::kS, 0});
  sx.apply_gate({GateKind::kS, 0});
  CHECK(description_string(sx) == "-X");
  Circuit dense;
  dense.n_in = dense.n_out = 1;
  dense.gates = {{GateKind::kH, 0}, {GateKind::kS, 0}, {GateKind::kS, 0}};
  CHECK(distance_up_to_phase(to_statevector(sx), run_pure(dense)) < 1e-9);

  CHECK_THROWS_AS(sx.apply_gate({GateKind::kT, 0}), std::invalid_argument);
}

TEST_CASE("tableau evolution equals dense evolution gate by gate") {
  Rng rng = make_rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 1 + uniform_int(rng, 5);
    const Circuit c = random_pure_circuit(n, 30, rng, true);
    StabilizerTableau t = StabilizerTableau::zero_state(n);
    PureState psi = PureState::zero(n);
    for (const auto& g : c.gates) {
      t.apply_gate(g);
      apply_gate(psi, g);
      CHECK(valid_tableau(t));
      const double fid = std::abs(inner_product(to_statevector(t), psi));
      CHECK(fid > 1.0 - 1e-9);
    }
  }
}

TEST_CASE("measurement") {
  Rng rng = make_rng(29);
  SUBCASE("deterministic zero") {
    StabilizerTableau t = StabilizerTableau::zero_state(1);
    CHECK(t.measure_z(0, rng) == 0);
  }
  SUBCASE("plus state collapses to the outcome") {
    int ones = 0;
    const int trials = 2000;
    for (int i = 0; i < trials; ++i) {
      StabilizerTableau t = StabilizerTableau::zero_state(1);
      t.apply_gate({GateKind::kH, 0});
      const int outcome = t.measure_z(0, rng);
      ones += outcome;
      // Post-state stabilizes (-1)^outcome Z.
      CHECK(description_string(t) == (outcome ? "-Z" : "+Z"));
      CHECK(t.measure_z(0, rng) == outcome);
    }
    const double freq = static_cast<double>(ones) / trials;
    CHECK(std::abs(freq - 0.5) < 5 * std::sqrt(0.25 / trials));
  }
  SUBCASE("bell pair outcomes agree") {
    for (int i = 0; i < 200; ++i) {
      StabilizerTableau t = StabilizerTableau::zero_state(2);
      t.apply_gate({GateKind::kH, 0});
      t.apply_gate({GateKind::kCnot, 1, 0});
      CHECK(t.measure_z(0, rng) == t.measure_z(1, rng));
    }
  }
  SUBCASE("measurement needs destabilizers") {
    StabilizerTableau t = from_strings({"+Z"});
    CHECK_THROWS_AS(t.measure_z(0, rng), std::invalid_argument);
  }
}

TEST_CASE("canonical form") {
  CHECK(from_strings({"+ZZ", "+ZI"}).canonical_form().stabilizers() ==
        from_strings({"+IZ", "+ZI"}).canonical_form().stabilizers());

  CHECK(description_string(StabilizerTableau::zero_state(3)) ==
        "+ZII|+IZI|+IIZ");

  SUBCASE("invariant under row shuffling and multiplication") {
    Rng rng = make_rng(37);
    for (int trial = 0; trial < 50; ++trial) {
      const int n = 2 + uniform_int(rng, 4);
      const StabilizerTableau t = random_stabilizer(n, rng);
      std::vector<PauliString> rows = t.stabilizers();
      for (int mix = 0; mix < 6; ++mix) {
        const int a = uniform_int(rng, n), b = uniform_int(rng, n);
        if (a != b) rows[a] *= rows[b];
        std::swap(rows[uniform_int(rng, n)], rows[uniform_int(rng, n)]);
      }
      const StabilizerTableau shuffled =
          StabilizerTableau::from_stabilizers(rows);
      CHECK(shuffled.canonical_form().stabilizers() ==
            t.canonical_form().stabilizers());
    }
  }

  SUBCASE("idempotent") {
    Rng rng = make_rng(41);
    const StabilizerTableau t = random_stabilizer(4, rng);
    const auto once = t.canonical_form();
    CHECK(once.canonical_form().stabilizers() == once.stabilizers());
  }
}

TEST_CASE("description strings") {
  CHECK(description_string(StabilizerTableau::zero_state(2)) == "+ZI|+IZ");

  StabilizerTableau bell = StabilizerTableau::zero_state(2);
  bell.apply_gate({GateKind::kH, 0});
  bell.apply_gate({GateKind::kCnot, 1, 0});
  CHECK(description_string(bell) == "+XX|+ZZ");

  SUBCASE("equal states produce equal strings") {
    Rng rng = make_rng(43);
    const StabilizerTableau t = random_stabilizer(3, rng);
    std::vector<PauliString> rows = t.stabilizers();
    rows[0] *= rows[1];
    CHECK(description_string(StabilizerTableau::from_stabilizers(rows)) ==
          description_string(t));
  }

  SUBCASE("round trip through parsing") {
    Rng rng = make_rng(47);
    for (int trial = 0; trial < 30; ++trial) {
      const StabilizerTableau t = random_stabilizer(1 + uniform_int(rng, 4),
                                                    rng);
      const std::string desc = description_string(t);
      CHECK(tableau_from_description(desc).same_state(t));
      CHECK(description_string(tableau_from_description(desc)) == desc);
    }
  }

  SUBCASE("noisy oracle failure rate is e^{-n}") {
    Rng rng = make_rng(53);
    const StabilizerTableau t = StabilizerTableau::zero_state(2);
    int failures = 0;
    const int trials = 10000;
    for (int i = 0; i < trials; ++i)
      if (!description_string_noisy(t, rng)) ++failures;
    const double p = std::exp(-2.0);
    const double freq = static_cast<double>(failures) / trials;
    CHECK(std::abs(freq - p) < 5 * std::sqrt(p * (1 - p) / trials));
  }
}

TEST_CASE("overlap") {
  const StabilizerTableau zero = StabilizerTableau::zero_state(1);
  const StabilizerTableau plus = from_strings({"+X"});
  const StabilizerTableau one = from_strings({"-Z"});

  const auto same = stabilizer_overlap(zero, zero);
  CHECK(same.value == 1.0);
  CHECK(same.mismatch_count == 0);

  const auto zp = stabilizer_overlap(zero, plus);
  CHECK(zp.value == doctest::Approx(std::exp2(-0.5)));
  CHECK(zp.mismatch_count == 1);

  const auto zo = stabilizer_overlap(zero, one);
  CHECK(zo.orthogonal);
  CHECK(zo.value == 0.0);

  StabilizerTableau bell = StabilizerTableau::zero_state(2);
  bell.apply_gate({GateKind::kH, 0});
  bell.apply_gate({GateKind::kCnot, 1, 0});
  const auto zb = stabilizer_overlap(StabilizerTableau::zero_state(2), bell);
  CHECK(zb.value == doctest::Approx(std::exp2(-0.5)));

  SUBCASE("matches dense inner products on random pairs") {
    Rng rng = make_rng(59);
    for (int trial = 0; trial < 200; ++trial) {
      const int n = 1 + uniform_int(rng, 5);
      const StabilizerTableau a = random_stabilizer(n, rng);
      const StabilizerTableau b = random_stabilizer(n, rng);
      const auto overlap = stabilizer_overlap(a, b);
      CHECK(std::abs(overlap.value - dense_overlap(a, b)) < 1e-9);
      if (!overlap.orthogonal) {
        CHECK(overlap.value ==
              doctest::Approx(std::exp2(-0.5 * overlap.mismatch_count)));
      }
    }
  }
}

TEST_CASE("graph states") {
  SUBCASE("empty graph") {
    const auto prep = graph_state(Graph::from_edges(2, {}));
    CHECK(description_string(prep.tableau) == "+XI|+IX");
  }
  SUBCASE("single edge") {
    const auto prep = graph_state(Graph::from_edges(2, {{0, 1}}));
    CHECK(description_string(prep.tableau) ==
          description_string(from_strings({"+XZ", "+ZX"})));
  }
  SUBCASE("triangle") {
    const auto prep =
        graph_state(Graph::from_edges(3, {{0, 1}, {1, 2}, {0, 2}}));
    CHECK(description_string(prep.tableau) ==
          description_string(from_strings({"+XZZ", "+ZXZ", "+ZZX"})));
  }
  SUBCASE("circuit and generators agree, densely too") {
    Rng rng = make_rng(61);
    for (int trial = 0; trial < 20; ++trial) {
      const int n = 2 + uniform_int(rng, 4);
      const Graph g = random_graph(n, 0.5, rng);
      const auto prep = graph_state(g);
      const StabilizerTableau from_circuit = run_stabilizer(prep.circuit);
      CHECK(from_circuit.same_state(prep.tableau));
      CHECK(distance_up_to_phase(to_statevector(prep.tableau),
                                 run_pure(prep.circuit)) < 1e-9);
    }
  }
}

TEST_CASE("permute qubits") {
  Rng rng = make_rng(67);
  SUBCASE("identity and inverses") {
    for (int trial = 0; trial < 20; ++trial) {
      const int n = 2 + uniform_int(rng, 4);
      const StabilizerTableau t = random_stabilizer(n, rng);
      CHECK(permute_qubits(t, Permutation::identity(n)).same_state(t));
      const auto sigma = PermGroup::symmetric(n).sample_uniform(rng);
      CHECK(permute_qubits(permute_qubits(t, sigma), sigma.inverse())
                .same_state(t));
    }
  }
  SUBCASE("matches P_sigma densely up to phase") {
    for (int trial = 0; trial < 20; ++trial) {
      const int n = 2 + uniform_int(rng, 4);
      const StabilizerTableau t = random_stabilizer(n, rng);
      const auto sigma = PermGroup::symmetric(n).sample_uniform(rng);
      CHECK(distance_up_to_phase(to_statevector(permute_qubits(t, sigma)),
                                 apply_perm(sigma, to_statevector(t))) <
            1e-9);
    }
  }
  SUBCASE("graph state of sigma(G), exhaustive n <= 4") {
    for (int n = 2; n <= 4; ++n) {
      const auto elements = PermGroup::symmetric(n).enumerate();
      for (const auto& g : all_graphs(n))
        for (const auto& sigma : elements)
          CHECK(permute_qubits(graph_state(g).tableau, sigma)
                    .same_state(graph_state(relabel(g, sigma)).tableau));
    }
  }
}

TEST_CASE("statevector bridge") {
  CHECK(distance_up_to_phase(to_statevector(from_strings({"+Z"})),
                             PureState::zero(1)) < 1e-12);
  CHECK(distance_up_to_phase(
            to_statevector(from_strings({"+X"})),
            testutil::state_from(1, {1 / std::sqrt(2.0),
                                     1 / std::sqrt(2.0)})) < 1e-12);
  CHECK(distance_up_to_phase(
            to_statevector(from_strings({"+XX", "+ZZ"})),
            testutil::state_from(2, {1 / std::sqrt(2.0), 0, 0,
                                     1 / std::sqrt(2.0)})) < 1e-12);

  SUBCASE("every generator fixes the vector") {
    Rng rng = make_rng(71);
    for (int trial = 0; trial < 30; ++trial) {
      const int n = 1 + uniform_int(rng, 5);
      const StabilizerTableau t = random_stabilizer(n, rng);
      const PureState psi = to_statevector(t);
      CHECK(std::abs(psi.norm() - 1.0) < 1e-9);
      for (const auto& row : t.stabilizers())
        CHECK((row.apply(psi).amps - psi.amps).norm() < 1e-9);
    }
  }
}

TEST_CASE("random stabilizer states") {
  SUBCASE("n = 1 reaches exactly the six states") {
    std::set<std::string> seen;
    Rng rng = make_rng(73);
    for (int i = 0; i < 300; ++i)
      seen.insert(description_string(random_stabilizer(1, rng)));
    const std::set<std::string> expected{"+X", "-X", "+Y", "-Y", "+Z", "-Z"};
    CHECK(seen == expected);
  }
  SUBCASE("seeded determinism") {
    Rng a = make_rng(99), b = make_rng(99);
    for (int i = 0; i < 10; ++i)
      CHECK(description_string(random_stabilizer(3, a)) ==
            description_string(random_stabilizer(3, b)));
  }
  SUBCASE("invariants hold") {
    Rng rng = make_rng(79);
    for (int i = 0; i < 50; ++i)
      CHECK(valid_tableau(random_stabilizer(1 + uniform_int(rng, 6), rng)));
  }
}
