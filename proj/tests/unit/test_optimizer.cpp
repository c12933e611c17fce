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
#include <functional>
#include <numbers>

#include "oracles.hpp"
#include "qdist/corpus.hpp"
#include "qdist/optimizer.hpp"
#include "qdist/simulator.hpp"

namespace qdist {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTol = 1e-7;

Circuit circ(std::size_t width, std::vector<Gate> gates) {
  return Circuit(width, std::move(gates));
}
Gate g(GateKind k, std::vector<Qubit> q, std::vector<double> p = {}) {
  return make_gate(k, std::move(q), std::move(p));
}

using Pass = std::function<PassResult(const Circuit&)>;
const std::vector<std::pair<std::string, Pass>>& passes() {
  static const std::vector<std::pair<std::string, Pass>> all = {
      {"cancel_inverse_pairs", cancel_inverse_pairs},
      {"merge_rotations", merge_rotations},
      {"commutative_cancellation", commutative_cancellation},
      {"collect_and_resynthesize_blocks", collect_and_resynthesize_blocks},
  };
  return all;
}

TEST_CASE("cancel_inverse_pairs examples") {
  CHECK(cancel_inverse_pairs(circ(1, {g(GateKind::H, {0}), g(GateKind::H, {0})})).circuit.empty());

  const auto r = cancel_inverse_pairs(
      circ(1, {g(GateKind::T, {0}), g(GateKind::Tdg, {0}), g(GateKind::T, {0})}));
  CHECK(r.circuit.same_gates(circ(1, {g(GateKind::T, {0})})));
  CHECK(r.report.changed);
  CHECK(r.report.before.one_qubit == 3);
  CHECK(r.report.after.one_qubit == 1);

  // Nested pairs collapse in one call.
  const auto nested = cancel_inverse_pairs(circ(2, {g(GateKind::S, {0}), g(GateKind::CX, {0, 1}),
                                                    g(GateKind::CX, {0, 1}), g(GateKind::Sdg, {0})}));
  CHECK(nested.circuit.empty());

  // Different qubit tuples are not inverses.
  const Circuit kept = circ(2, {g(GateKind::CX, {0, 1}), g(GateKind::CX, {1, 0})});
  CHECK(cancel_inverse_pairs(kept).circuit.same_gates(kept));
  CHECK_FALSE(cancel_inverse_pairs(kept).report.changed);

  // SWAP is symmetric in its operands; CZ too.
  CHECK(is_inverse_pair(g(GateKind::CZ, {0, 1}), g(GateKind::CZ, {0, 1})));
  CHECK(is_inverse_pair(g(GateKind::CCX, {0, 1, 2}), g(GateKind::CCX, {0, 1, 2})));
  CHECK(is_inverse_pair(g(GateKind::RY, {0}, {0.4}), g(GateKind::RY, {0}, {-0.4})));
  CHECK_FALSE(is_inverse_pair(g(GateKind::RY, {0}, {0.4}), g(GateKind::RY, {0}, {0.4})));
}

TEST_CASE("merge_rotations examples") {
  const auto m = merge_rotations(
      circ(1, {g(GateKind::RZ, {0}, {0.3}), g(GateKind::RZ, {0}, {0.4})}));
  REQUIRE(m.circuit.size() == 1);
  CHECK(m.circuit[0].kind == GateKind::RZ);
  CHECK(m.circuit[0].params[0] == Catch::Approx(0.7).margin(1e-15));

  CHECK(merge_rotations(circ(1, {g(GateKind::RZ, {0}, {kPi}), g(GateKind::RZ, {0}, {kPi})}))
            .circuit.empty());

  const Circuit mixed = circ(1, {g(GateKind::RZ, {0}, {0.3}), g(GateKind::RX, {0}, {0.4})});
  CHECK(merge_rotations(mixed).circuit.same_gates(mixed));

  // Wrapping into (-pi, pi].
  const auto w = merge_rotations(
      circ(1, {g(GateKind::RX, {0}, {3.0}), g(GateKind::RX, {0}, {3.0})}));
  REQUIRE(w.circuit.size() == 1);
  CHECK(w.circuit[0].params[0] == Catch::Approx(6.0 - 2 * kPi));
}

TEST_CASE("commutative_cancellation examples") {
  const double theta = 0.37;
  const Circuit through_control =
      circ(2, {g(GateKind::CX, {0, 1}), g(GateKind::RZ, {0}, {theta}), g(GateKind::CX, {0, 1})});
  const auto r = commutative_cancellation(through_control);
  CHECK(r.circuit.same_gates(circ(2, {g(GateKind::RZ, {0}, {theta})})));
  CHECK(unitary_equal_up_to_phase(r.circuit, through_control, kTol));

  const Circuit blocked =
      circ(2, {g(GateKind::CX, {0, 1}), g(GateKind::RX, {0}, {theta}), g(GateKind::CX, {0, 1})});
  CHECK(commutative_cancellation(blocked).circuit.same_gates(blocked));
  // The oracle confirms cancelling here would have been wrong.
  CHECK_FALSE(unitary_equal_up_to_phase(blocked, circ(2, {g(GateKind::RX, {0}, {theta})}), kTol));

  // X-type gates pass through the target.
  const Circuit through_target =
      circ(2, {g(GateKind::CX, {0, 1}), g(GateKind::RX, {1}, {theta}), g(GateKind::CX, {0, 1})});
  const auto t = commutative_cancellation(through_target);
  CHECK(t.circuit.size() == 1);
  CHECK(unitary_equal_up_to_phase(t.circuit, through_target, kTol));

  // CX pairs sharing a control commute.
  const Circuit shared =
      circ(3, {g(GateKind::CX, {0, 1}), g(GateKind::CX, {0, 2}), g(GateKind::CX, {0, 1})});
  const auto s = commutative_cancellation(shared);
  CHECK(s.circuit.same_gates(circ(3, {g(GateKind::CX, {0, 2})})));

  // Diagonal gates commute with CZ on either qubit.
  const Circuit cz = circ(2, {g(GateKind::T, {1}), g(GateKind::CZ, {0, 1}), g(GateKind::Tdg, {1})});
  CHECK(commutative_cancellation(cz).circuit.same_gates(circ(2, {g(GateKind::CZ, {0, 1})})));
}

TEST_CASE("markers are barriers for every pass") {
  const Circuit c = circ(1, {g(GateKind::H, {0}), make_marker({0}, GateKind::CX, 0),
                             g(GateKind::H, {0})});
  for (const auto& [name, pass] : passes()) {
    INFO(name);
    const auto r = pass(c);
    CHECK(r.circuit.same_gates(c));
    CHECK_FALSE(r.report.changed);
  }
  CHECK(optimize(c).circuit.same_gates(c));

  const Circuit rz = circ(2, {g(GateKind::RZ, {0}, {0.2}), make_marker({0, 1}, GateKind::CCX, 4),
                              g(GateKind::RZ, {0}, {0.3})});
  CHECK(optimize(rz).circuit.same_gates(rz));

  // A marker on an unrelated qubit does not block anything.
  const Circuit other = circ(2, {g(GateKind::H, {0}), make_marker({1}, GateKind::CX, 0),
                                 g(GateKind::H, {0})});
  CHECK(optimize(other).circuit.same_gates(circ(2, {make_marker({1}, GateKind::CX, 0)})));
}

TEST_CASE("block resynthesis examples") {
  const Circuit triple = circ(2, {g(GateKind::CX, {0, 1}), g(GateKind::CX, {0, 1}),
                                  g(GateKind::CX, {0, 1})});
  const auto r = collect_and_resynthesize_blocks(triple);
  CHECK(r.circuit.same_gates(circ(2, {g(GateKind::CX, {0, 1})})));
  CHECK(unitary_equal_up_to_phase(r.circuit, triple, kTol));

  const Circuit swap = circ(2, {g(GateKind::CX, {0, 1}), g(GateKind::CX, {1, 0}),
                                g(GateKind::CX, {0, 1})});
  const auto s = collect_and_resynthesize_blocks(swap);
  CHECK(gate_counts(s.circuit).two_qubit == 3);
  CHECK(unitary_equal_up_to_phase(s.circuit, swap, kTol));
  const std::vector<Gate> swap_gate = {g(GateKind::SWAP, {0, 1})};
  CHECK(testing::phase_free_distance(testing::two_qubit_oracle(swap_gate),
                                     testing::two_qubit_oracle({s.circuit.gates().begin(),
                                                                s.circuit.gates().end()})) < kTol);

  // A single 2Q gate is never touched.
  const Circuit single = circ(2, {g(GateKind::H, {0}), g(GateKind::CX, {0, 1}), g(GateKind::H, {0})});
  CHECK(collect_and_resynthesize_blocks(single).circuit.same_gates(single));
}

TEST_CASE("CCX splits blocks") {
  const Circuit c = circ(3, {g(GateKind::CX, {0, 1}), g(GateKind::CX, {0, 1}),
                             g(GateKind::CCX, {0, 1, 2}), g(GateKind::CX, {0, 1}),
                             g(GateKind::CX, {0, 1})});
  const auto blocks = collect_blocks(c);
  REQUIRE(blocks.size() == 2);
  CHECK(blocks[0].gate_indices == std::vector<std::size_t>{0, 1});
  CHECK(blocks[1].gate_indices == std::vector<std::size_t>{3, 4});
  for (const auto& b : blocks) CHECK(unitarity_error(b.unitary) < 1e-9);

  // Each side cancels to the identity on its own; the CCX survives.
  const auto r = collect_and_resynthesize_blocks(c);
  CHECK(r.circuit.same_gates(circ(3, {g(GateKind::CCX, {0, 1, 2})})));
}

TEST_CASE("optimize examples") {
  const Circuit h = circ(1, {g(GateKind::H, {0})});
  const auto r = optimize(h);
  CHECK(r.circuit.same_gates(h));
  CHECK(r.iterations == 1);
  CHECK(r.reports.size() == 4);

  const auto e = optimize(circ(2, {g(GateKind::H, {0}), g(GateKind::H, {0}),
                                   g(GateKind::RZ, {1}, {0.2}), g(GateKind::RZ, {1}, {-0.2})}));
  CHECK(e.circuit.empty());
  CHECK(e.iterations >= 1);
  CHECK(e.iterations <= kMaxOptimizeIterations);
}

TEST_CASE("passes preserve semantics and never grow the circuit") {
  Rng rng(2024);
  for (int trial = 0; trial < 120; ++trial) {
    const std::size_t width = 2 + trial % 5;
    const Circuit c = testing::random_circuit(width, 10 + trial % 40, rng);
    const GateCounts before = gate_counts(c);
    for (const auto& [name, pass] : passes()) {
      INFO(name << " trial " << trial);
      const auto r = pass(c);
      CHECK(unitary_equal_up_to_phase(r.circuit, c, kTol));
      const GateCounts after = gate_counts(r.circuit);
      CHECK(r.report.before == before);
      CHECK(r.report.after == after);
      CHECK(r.report.depth_before == depth(c));
      CHECK(r.report.depth_after == depth(r.circuit));
      CHECK(r.report.iterations >= 1);
      CHECK(r.report.changed == !r.circuit.same_gates(c));
      CHECK(after.two_qubit <= before.two_qubit);
      CHECK(after.three_qubit <= before.three_qubit);
      if (name != "collect_and_resynthesize_blocks") {
        CHECK(after.one_qubit <= before.one_qubit);
        CHECK(r.circuit.size() <= c.size());
      } else {
        CHECK(after.three_qubit == before.three_qubit);
        CHECK(after.total() <= before.total());
      }
    }
    const auto o = optimize(c);
    CHECK(unitary_equal_up_to_phase(o.circuit, c, kTol));
    CHECK(gate_counts(o.circuit).total() <= before.total());
    CHECK(o.iterations >= 1);
    // Idempotence.
    CHECK(optimize(o.circuit).circuit.same_gates(o.circuit));
  }
}

TEST_CASE("optimize preserves every small corpus circuit") {
  for (const Family f : all_families()) {
    for (std::size_t w : {2, 3, 5, 8}) {
      const Circuit c = generate(f, w, 1);
      INFO(c.id());
      const auto o = optimize(c);
      CHECK(unitary_equal_up_to_phase(o.circuit, c, kTol));
      CHECK(optimize(o.circuit).circuit.same_gates(o.circuit));
    }
  }
}

TEST_CASE("a full-width marker splits optimisation into independent halves") {
  Rng rng(77);
  for (int trial = 0; trial < 40; ++trial) {
    const Circuit head = testing::random_circuit(3, 15, rng);
    const Circuit tail = testing::random_circuit(3, 15, rng);
    std::vector<Gate> gates(head.gates().begin(), head.gates().end());
    gates.push_back(make_marker({0, 1, 2}, GateKind::CCX, 9));
    gates.insert(gates.end(), tail.gates().begin(), tail.gates().end());
    const auto o = optimize(Circuit(3, gates));
    REQUIRE(gate_counts(o.circuit).markers == 1);
    std::size_t at = 0;
    while (!o.circuit[at].is_marker()) ++at;
    CHECK(o.circuit[at] == gates[head.size()]);
    const Circuit before(3, std::vector<Gate>{o.circuit.gates().begin(), o.circuit.gates().begin() + at});
    const Circuit after(3, std::vector<Gate>{o.circuit.gates().begin() + at + 1, o.circuit.gates().end()});
    CHECK(unitary_equal_up_to_phase(before, head, kTol));
    CHECK(unitary_equal_up_to_phase(after, tail, kTol));
  }
}

}  // namespace
}  // namespace qdist
