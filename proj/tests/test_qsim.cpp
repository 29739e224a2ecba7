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

#include <cmath>

#include "qiso/circuit.hpp"
#include "qiso/errors.hpp"
#include "qiso/qsim.hpp"
#include "qiso/state.hpp"
#include "test_util.hpp"

using namespace qiso;
using qiso::testutil::kron;
using qiso::testutil::random_state;
using qiso::testutil::state_from;

namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

PureState plus_state() { return state_from(1, {kInvSqrt2, kInvSqrt2}); }

PureState bell_state() {
  return state_from(2, {kInvSqrt2, 0.0, 0.0, kInvSqrt2});
}

Circuit bell_circuit() {
  Circuit c;
  c.n_in = c.n_out = 2;
  c.gates = {{GateKind::kH, 0}, {GateKind::kCnot, 1, 0}};
  return c;
}

}  // namespace

TEST_CASE("run_pure basics") {
  Circuit empty;
  empty.n_in = empty.n_out = 1;
  CHECK((run_pure(empty).amps - PureState::zero(1).amps).norm() == 0.0);

  Circuit h;
  h.n_in = h.n_out = 1;
  h.gates = {{GateKind::kH, 0}};
  CHECK((run_pure(h).amps - plus_state().amps).norm() < 1e-12);

  CHECK((run_pure(bell_circuit()).amps - bell_state().amps).norm() < 1e-12);

  Circuit wide;
  wide.n_in = wide.n_out = 13;
  CHECK_THROWS_AS(run_pure(wide), TooManyQubits);
}

TEST_CASE("every gate preserves the norm") {
  Rng rng = make_rng(31);
  for (int n = 1; n <= 6; ++n) {
    PureState psi = PureState::zero(n);
    const Circuit c = random_pure_circuit(n, 40, rng, false);
    for (const auto& g : c.gates) {
      apply_gate(psi, g);
      CHECK(std::abs(psi.norm() - 1.0) < 1e-9);
    }
  }
}

TEST_CASE("run_mixed") {
  Circuit empty21;
  empty21.n_in = 2;
  empty21.n_out = 1;
  const DensityMatrix zero = run_mixed(empty21);
  CHECK(std::abs(zero.rho(0, 0).real() - 1.0) < 1e-12);
  CHECK(std::abs(zero.rho(1, 1)) < 1e-12);

  // Tracing half a Bell pair leaves the maximally mixed qubit.
  Circuit bell21 = bell_circuit();
  bell21.n_out = 1;
  const DensityMatrix mixed = run_mixed(bell21);
  CHECK((mixed.rho - 0.5 * Matrix::Identity(2, 2)).cwiseAbs().maxCoeff() <
        1e-12);

  // A product circuit leaves the kept factor pure.
  Circuit hh;
  hh.n_in = 2;
  hh.n_out = 1;
  hh.gates = {{GateKind::kH, 0}, {GateKind::kH, 1}};
  const DensityMatrix plus = run_mixed(hh);
  const DensityMatrix expected = DensityMatrix::from_pure(plus_state());
  CHECK((plus.rho - expected.rho).cwiseAbs().maxCoeff() < 1e-12);

  CHECK(is_valid_density(mixed));
  CHECK(is_valid_density(plus));
}

TEST_CASE("permutation unitary matches the index definition") {
  CHECK((perm_unitary_matrix(Permutation::identity(3)) -
         Matrix::Identity(8, 8))
            .cwiseAbs()
            .maxCoeff() == 0.0);

  // (1 2) maps |01> to |10>.
  const auto swap01 = Permutation::transposition(2, 0, 1);
  const PureState out = apply_perm(swap01, PureState::basis(2, 0b01));
  CHECK(std::abs(out.amps[0b10] - Complex(1, 0)) < 1e-12);

  // Anti-homomorphism P_sigma P_tau = P_{tau . sigma}, exhaustive on basis
  // states for n <= 5.
  for (int n = 2; n <= 5; ++n) {
    const auto elements = PermGroup::symmetric(n).enumerate();
    for (const auto& sigma : elements)
      for (const auto& tau : elements) {
        bool equal = true;
        for (std::int64_t b = 0; b < dim_of(n) && equal; ++b) {
          const PureState lhs =
              apply_perm(sigma, apply_perm(tau, PureState::basis(n, b)));
          const PureState rhs = apply_perm(tau * sigma, PureState::basis(n, b));
          equal = (lhs.amps - rhs.amps).norm() < 1e-12;
        }
        CHECK(equal);
        if (!equal) return;
      }
  }
}

TEST_CASE("permutation matrices are unitary") {
  Rng rng = make_rng(8);
  for (int trial = 0; trial < 5; ++trial) {
    const auto sigma = PermGroup::symmetric(6).sample_uniform(rng);
    const Matrix u = perm_unitary_matrix(sigma);
    CHECK((u.adjoint() * u - Matrix::Identity(u.rows(), u.cols()))
              .cwiseAbs()
              .maxCoeff() < 1e-9);
  }
}

TEST_CASE("inner product and swap test") {
  const PureState zero = PureState::zero(1);
  const PureState one = PureState::basis(1, 1);
  CHECK(std::abs(inner_product(zero, zero) - Complex(1, 0)) < 1e-12);
  CHECK(std::abs(inner_product(zero, one)) < 1e-12);
  CHECK(std::abs(inner_product(zero, plus_state()) - Complex(kInvSqrt2, 0)) <
        1e-12);

  CHECK(swap_test_prob(zero, zero) == doctest::Approx(1.0));
  CHECK(swap_test_prob(zero, one) == doctest::Approx(0.5));
  CHECK(swap_test_prob(zero, plus_state()) == doctest::Approx(0.75));
}

TEST_CASE("swap test sampling") {
  Rng rng = make_rng(2024);
  const PureState zero = PureState::zero(1);
  for (int i = 0; i < 1000; ++i) CHECK(swap_test_sample(zero, zero, rng));

  const PureState one = PureState::basis(1, 1);
  int accepts = 0;
  const int trials = 10000;
  for (int i = 0; i < trials; ++i)
    if (swap_test_sample(zero, one, rng)) ++accepts;
  const double freq = static_cast<double>(accepts) / trials;
  const double sigma = std::sqrt(0.25 / trials);
  CHECK(std::abs(freq - 0.5) < 5 * sigma);

  Rng a = make_rng(55), b = make_rng(55);
  for (int i = 0; i < 100; ++i)
    CHECK(swap_test_sample(zero, plus_state(), a) ==
          swap_test_sample(zero, plus_state(), b));
}

TEST_CASE("trace distance") {
  const DensityMatrix z = DensityMatrix::from_pure(PureState::zero(1));
  const DensityMatrix o = DensityMatrix::from_pure(PureState::basis(1, 1));
  const DensityMatrix p = DensityMatrix::from_pure(plus_state());
  CHECK(trace_distance(z, z) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(trace_distance(z, o) == doctest::Approx(1.0));
  CHECK(trace_distance(z, p) == doctest::Approx(std::sqrt(0.5)));

  SUBCASE("pure-state formula") {
    Rng rng = make_rng(3);
    for (int trial = 0; trial < 30; ++trial) {
      const int n = 1 + uniform_int(rng, 3);
      const PureState a = random_state(n, rng);
      const PureState b = random_state(n, rng);
      const double overlap = std::abs(inner_product(a, b));
      const double expected = std::sqrt(std::max(0.0, 1.0 - overlap * overlap));
      CHECK(trace_distance(DensityMatrix::from_pure(a),
                           DensityMatrix::from_pure(b)) ==
            doctest::Approx(expected).epsilon(1e-8));
    }
  }

  SUBCASE("metric properties on sampled triples") {
    Rng rng = make_rng(4);
    for (int trial = 0; trial < 20; ++trial) {
      const int n = 1 + uniform_int(rng, 2);
      Circuit c = random_pure_circuit(n + 1, 20, rng, false);
      c.n_out = n;
      const DensityMatrix r = run_mixed(c);
      Circuit c2 = random_pure_circuit(n + 1, 20, rng, false);
      c2.n_out = n;
      const DensityMatrix s = run_mixed(c2);
      Circuit c3 = random_pure_circuit(n + 1, 20, rng, false);
      c3.n_out = n;
      const DensityMatrix t = run_mixed(c3);
      const double rs = trace_distance(r, s);
      const double sr = trace_distance(s, r);
      CHECK(std::abs(rs - sr) < 1e-10);
      CHECK(rs <= trace_distance(r, t) + trace_distance(t, s) + 1e-8);
      CHECK(rs >= -1e-9);
      CHECK(rs <= 1.0 + 1e-9);
    }
  }
}

TEST_CASE("partial trace") {
  const DensityMatrix z = DensityMatrix::from_pure(PureState::zero(1));
  const DensityMatrix p = DensityMatrix::from_pure(plus_state());
  const DensityMatrix prod = tensor(z, p);

  const DensityMatrix second = partial_trace(prod, {1});
  CHECK((second.rho - p.rho).cwiseAbs().maxCoeff() < 1e-12);

  const DensityMatrix bell = DensityMatrix::from_pure(bell_state());
  const DensityMatrix half = partial_trace(bell, {0});
  CHECK((half.rho - 0.5 * Matrix::Identity(2, 2)).cwiseAbs().maxCoeff() <
        1e-12);

  const DensityMatrix all = partial_trace(prod, {0, 1});
  CHECK((all.rho - prod.rho).cwiseAbs().maxCoeff() < 1e-12);

  CHECK_THROWS_AS(partial_trace(prod, {2}), std::invalid_argument);

  Rng rng = make_rng(6);
  for (int trial = 0; trial < 10; ++trial) {
    Circuit c = random_pure_circuit(4, 25, rng, false);
    const DensityMatrix rho =
        DensityMatrix::from_pure(run_pure(c));
    const DensityMatrix reduced = partial_trace(rho, {1, 3});
    CHECK(std::abs(reduced.rho.trace().real() - 1.0) < 1e-9);
    CHECK(is_valid_density(reduced));
  }
}

TEST_CASE("u_pi against the dense matrix product") {
  Rng rng = make_rng(77);
  for (int n = 2; n <= 3; ++n) {
    const auto elements = PermGroup::symmetric(n).enumerate();
    // Block swap as a permutation unitary on 2n qubits.
    std::vector<int> swap_images(2 * n);
    for (int i = 0; i < n; ++i) {
      swap_images[i] = n + i;
      swap_images[n + i] = i;
    }
    const Matrix swap_dense = perm_unitary_matrix(Permutation(swap_images));
    for (const auto& pi : elements) {
      const Matrix expected =
          swap_dense * kron(perm_unitary_matrix(pi.inverse()),
                            perm_unitary_matrix(pi));
      CHECK((u_pi_matrix(pi) - expected).cwiseAbs().maxCoeff() < 1e-12);
    }
  }

  SUBCASE("identity reduces to the block swap") {
    const int n = 2;
    std::vector<int> swap_images{2, 3, 0, 1};
    CHECK(u_pi_permutation(Permutation::identity(n)) ==
          Permutation(swap_images));
  }

  SUBCASE("U_sigma fixes (P_sigma psi) x psi") {
    for (int trial = 0; trial < 10; ++trial) {
      const int n = 2 + uniform_int(rng, 2);
      const PureState psi = random_state(n, rng);
      const auto sigma = PermGroup::symmetric(n).sample_uniform(rng);
      const PureState combined = tensor(apply_perm(sigma, psi), psi);
      const PureState after = apply_u_pi(sigma, combined);
      CHECK((after.amps - combined.amps).norm() < 1e-9);
    }
  }

  SUBCASE("non-fixing pi leaves overlap below one") {
    const int n = 3;
    const PureState a = random_state(n, rng);
    const PureState b = random_state(n, rng);
    const PureState combined = tensor(a, b);
    const auto pi = PermGroup::symmetric(n).sample_uniform(rng);
    const Matrix u = u_pi_matrix(pi);
    const Complex overlap =
        (combined.amps.adjoint() * (u * combined.amps))(0, 0);
    CHECK(std::abs(overlap) < 1.0 - 1e-6);
  }
}

TEST_CASE("group twirl mixture") {
  Rng rng = make_rng(9);
  SUBCASE("trivial group, one copy") {
    const PureState psi = random_state(2, rng);
    const DensityMatrix mix =
        group_twirl_mixture(psi, PermGroup::trivial(2), 1);
    CHECK((mix.rho - DensityMatrix::from_pure(psi).rho).cwiseAbs().maxCoeff() <
          1e-12);
  }
  SUBCASE("isomorphic basis pair is perfectly mixed together") {
    const PureState s01 = PureState::basis(2, 0b01);
    const PureState s10 = PureState::basis(2, 0b10);
    const PermGroup s2 = PermGroup::symmetric(2);
    const DensityMatrix rho0 = group_twirl_mixture(s01, s2, 1);
    const DensityMatrix rho1 = group_twirl_mixture(s10, s2, 1);
    CHECK(trace_distance(rho0, rho1) < 1e-10);
    // Both equal (|01><01| + |10><10|)/2 by direct computation.
    Matrix expected = Matrix::Zero(4, 4);
    expected(1, 1) = 0.5;
    expected(2, 2) = 0.5;
    CHECK((rho0.rho - expected).cwiseAbs().maxCoeff() < 1e-12);
  }
  SUBCASE("limits") {
    const PureState psi = random_state(4, rng);
    CHECK_THROWS_AS(group_twirl_mixture(psi, PermGroup::symmetric(4), 4),
                    TooManyQubits);
    CHECK_THROWS_AS(group_twirl_mixture(psi, PermGroup::symmetric(4), 2, 10),
                    CapExceeded);
  }
}
