// Copyright 2026 The qdist Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <catch_amalgamated.hpp>
#include <cmath>

#include "oracles.hpp"
#include "qdist/errors.hpp"
#include "qdist/simulator.hpp"

namespace qdist {
namespace {

Gate g(GateKind k, std::vector<Qubit> q, std::vector<double> p = {}) {
  return make_gate(k, std::move(q), std::move(p));
}

TEST_CASE("H on |0>") {
  const StateVector s = apply(Circuit(1, {g(GateKind::H, {0})}), StateVector(1));
  const double r = 1.0 / std::sqrt(2.0);
  CHECK(std::abs(s.amplitudes()[0] - r) < 1e-15);
  CHECK(std::abs(s.amplitudes()[1] - r) < 1e-15);
}

TEST_CASE("CX flips the target when the control is set") {
  // Qubit q is bit q of the index: |q0=1, q1=0> is index 1.
  const StateVector s = apply(Circuit(2, {g(GateKind::CX, {0, 1})}), StateVector::basis(2, 1));
  CHECK(std::abs(s.amplitudes()[3] - 1.0) < 1e-15);
  const StateVector u = apply(Circuit(2, {g(GateKind::CX, {0, 1})}), StateVector::basis(2, 2));
  CHECK(std::abs(u.amplitudes()[2] - 1.0) < 1e-15);
}

TEST_CASE("CCX and SWAP on basis states") {
  const Circuit ccx(3, {g(GateKind::CCX, {0, 1, 2})});
  for (std::size_t i = 0; i < 8; ++i) {
    const std::size_t expect = (i & 3) == 3 ? i ^ 4 : i;
    CHECK(std::abs(apply(ccx, StateVector::basis(3, i)).amplitudes()[expect] - 1.0) < 1e-15);
  }
  const Circuit swap(2, {g(GateKind::SWAP, {0, 1})});
  CHECK(std::abs(apply(swap, StateVector::basis(2, 1)).amplitudes()[2] - 1.0) < 1e-15);
}

TEST_CASE("RZ preserves basis probabilities") {
  Rng rng(1);
  for (int i = 0; i < 20; ++i) {
    StateVector s = apply(testing::random_circuit(3, 20, rng), StateVector(3));
    const auto before = s.amplitudes();
    const StateVector t = apply(Circuit(3, {g(GateKind::RZ, {1}, {uniform_real(rng, -4, 4)})}), s);
    for (std::size_t j = 0; j < before.size(); ++j)
      CHECK(std::norm(t.amplitudes()[j]) == Catch::Approx(std::norm(before[j])).margin(1e-14));
  }
}

TEST_CASE("equivalence examples") {
  Rng rng(2);
  const Circuit c = testing::random_circuit(4, 50, rng);
  CHECK(unitary_equal_up_to_phase(c, c, 1e-9));
  CHECK(unitary_equal_up_to_phase(Circuit(1, {g(GateKind::H, {0}), g(GateKind::H, {0})}),
                                  Circuit(1), 1e-9));
  CHECK_FALSE(unitary_equal_up_to_phase(Circuit(1, {g(GateKind::X, {0})}),
                                        Circuit(1, {g(GateKind::Z, {0})}), 1e-7));
  // Global phase is ignored: RZ(2pi) = -I.
  CHECK(unitary_equal_up_to_phase(Circuit(1, {g(GateKind::RZ, {0}, {2 * std::acos(-1.0)})}),
                                  Circuit(1), 1e-12));
}

TEST_CASE("norm is preserved gate by gate") {
  Rng rng(3);
  const Circuit c = testing::random_circuit(8, 400, rng);
  StateVector s(8);
  double drift = 0;
  for (const Gate& gate : c.gates()) {
    apply_gate(gate, s);
    drift = std::max(drift, std::abs(s.norm() - 1.0));
  }
  CHECK(drift < 1e-10);
}

TEST_CASE("composition") {
  Rng rng(4);
  for (int i = 0; i < 20; ++i) {
    const Circuit a = testing::random_circuit(5, 30, rng);
    const Circuit b = testing::random_circuit(5, 30, rng);
    std::vector<Gate> ab(a.gates().begin(), a.gates().end());
    ab.insert(ab.end(), b.gates().begin(), b.gates().end());
    const StateVector s0 = StateVector::basis(5, i % 32);
    const auto lhs = apply(Circuit(5, ab), s0).amplitudes();
    const auto rhs = apply(b, apply(a, s0)).amplitudes();
    for (std::size_t j = 0; j < lhs.size(); ++j) CHECK(std::abs(lhs[j] - rhs[j]) < 1e-12);
  }
}

TEST_CASE("two-qubit unitaries agree with the textbook oracle") {
  Rng rng(5);
  for (int i = 0; i < 100; ++i) {
    const Circuit c = testing::random_circuit(2, 10, rng);
    const auto u = circuit_unitary(c);
    const Eigen::Matrix4cd o = testing::two_qubit_oracle({c.gates().begin(), c.gates().end()});
    // Oracle index: q0 is the most significant bit; simulator: q0 is bit 0.
    auto swap_bits = [](int i) { return ((i & 1) << 1) | (i >> 1); };
    Eigen::MatrixXcd m(4, 4);
    for (int r = 0; r < 4; ++r)
      for (int col = 0; col < 4; ++col) m(swap_bits(r), swap_bits(col)) = u[col * 4 + r];
    CHECK(testing::phase_free_distance(m, o) < 1e-12);
  }
}

TEST_CASE("simulator errors") {
  CHECK_THROWS_AS(StateVector(11), WidthError);
  CHECK_THROWS_AS(unitary_equal_up_to_phase(Circuit(1), Circuit(2), 1e-7), WidthError);
  CHECK_THROWS_AS(apply(Circuit(1, {make_marker({0}, GateKind::CX, 0)}), StateVector(1)),
                  MarkerPresentError);
  CHECK_NOTHROW(StateVector(10));
}

}  // namespace
}  // namespace qdist
