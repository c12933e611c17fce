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

#include "oracles.hpp"
#include "qdist/corpus.hpp"
#include "qdist/distributor.hpp"
#include "qdist/errors.hpp"
#include "qdist/optimizer.hpp"
#include "qdist/partitioner.hpp"
#include "qdist/simulator.hpp"

namespace qdist {
namespace {

Gate g(GateKind k, std::vector<Qubit> q) { return make_gate(k, std::move(q)); }

Partition random_partition(std::size_t n, std::size_t k, Rng& rng) {
  Partition p{k, std::vector<PartId>(n), 0.03};
  for (auto& a : p.assignment) a = static_cast<PartId>(uniform_index(rng, k));
  return p;
}

TEST_CASE("GHZ-3 split after the second qubit") {
  const Circuit c = generate(Family::Ghz, 3, 0);
  const DistributedCircuit d = distribute(c, Partition{2, {0, 0, 1}, 0.03});
  REQUIRE(d.parts.size() == 2);
  REQUIRE(d.telegates.size() == 1);
  CHECK(d.telegates[0].gate == g(GateKind::CX, {1, 2}));
  CHECK(d.telegates[0].parts == std::vector<PartId>{0, 1});
  CHECK(d.telegates[0].position == 2);

  const Circuit& p0 = d.parts[0].circuit;
  REQUIRE(p0.size() == 3);
  CHECK(p0[0] == g(GateKind::H, {0}));
  CHECK(p0[1] == g(GateKind::CX, {0, 1}));
  CHECK(p0[2] == make_marker({1}, GateKind::CX, 0));
  CHECK(d.parts[0].local_to_global == std::vector<Qubit>{0, 1});

  const Circuit& p1 = d.parts[1].circuit;
  REQUIRE(p1.size() == 1);
  CHECK(p1[0] == make_marker({0}, GateKind::CX, 0));
  CHECK(d.parts[1].local_to_global == std::vector<Qubit>{2});

  const DistributedMetrics m = distributed_metrics(d);
  CHECK(m.counts.one_qubit == 1);
  CHECK(m.counts.two_qubit == 1);
  CHECK(m.counts.three_qubit == 0);
  CHECK(m.counts.markers == 2);
  CHECK(m.depth_max == 3);
  CHECK(m.depth_mean == Catch::Approx(2.0));
  CHECK(m.depth_max_without_markers == 2);
  CHECK(m.n_nonlocal == 1);
  CHECK(m.nonlocal_counts.two_qubit == 1);
}

TEST_CASE("k = 1 is the identity") {
  Rng rng(1);
  for (int t = 0; t < 20; ++t) {
    const Circuit c = testing::random_circuit(4, 30, rng);
    const DistributedCircuit d = distribute(c, Partition{1, {0, 0, 0, 0}, 0.03});
    REQUIRE(d.parts.size() == 1);
    CHECK(d.parts[0].circuit.same_gates(c));
    CHECK(d.telegates.empty());
    const DistributedMetrics m = distributed_metrics(d);
    CHECK(m.counts == gate_counts(c));
    CHECK(m.depth_max == depth(c));
    CHECK(m.n_nonlocal == 0);
  }
}

TEST_CASE("telegates, conservation and exact reassembly on random inputs") {
  Rng rng(2);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 2 + t % 9;
    const std::size_t k = 1 + t % n;
    const Circuit c = testing::random_circuit(n, 40, rng);
    const Partition p = random_partition(n, k, rng);
    const DistributedCircuit d = distribute(c, p);
    INFO("trial " << t);

    CHECK(d.telegates.size() == testing::recount_cut(c, p.assignment));
    CHECK(d.telegates.size() == cut_cost(build_hypergraph(c), p));

    // every global qubit in exactly one part
    std::vector<int> seen(n, 0);
    for (const auto& s : d.parts)
      for (Qubit q : s.local_to_global) ++seen[q];
    CHECK(std::all_of(seen.begin(), seen.end(), [](int x) { return x == 1; }));

    const DistributedMetrics m = distributed_metrics(d);
    const GateCounts src = gate_counts(c);
    CHECK(src.one_qubit == m.counts.one_qubit + m.nonlocal_counts.one_qubit);
    CHECK(src.two_qubit == m.counts.two_qubit + m.nonlocal_counts.two_qubit);
    CHECK(src.three_qubit == m.counts.three_qubit + m.nonlocal_counts.three_qubit);
    CHECK(m.nonlocal_counts.total() == d.telegates.size());
    std::size_t markers = 0;
    for (const auto& tg : d.telegates) markers += tg.parts.size();
    CHECK(m.counts.markers == markers);

    CHECK(reassemble(d).same_gates(c));
    // deterministic
    const DistributedCircuit again = distribute(c, p);
    for (std::size_t i = 0; i < d.parts.size(); ++i)
      CHECK(again.parts[i].circuit.same_gates(d.parts[i].circuit));
  }
}

TEST_CASE("reassembly after local optimisation preserves the unitary") {
  Rng rng(3);
  for (int t = 0; t < 60; ++t) {
    const std::size_t n = 3 + t % 6;
    const Circuit c = testing::random_circuit(n, 40, rng);
    const Partition p = random_partition(n, 1 + t % 3, rng);
    DistributedCircuit d = distribute(c, p);
    for (auto& s : d.parts) {
      s.circuit = optimize(s.circuit).circuit;
      s.source_positions.clear();
    }
    const Circuit r = reassemble(d);
    CHECK(unitary_equal_up_to_phase(r, c, 1e-7));
  }
}

TEST_CASE("distribute errors") {
  const Circuit c = generate(Family::Ghz, 3, 0);
  CHECK_THROWS_AS(distribute(c, Partition{2, {0, 1}, 0.03}), WidthError);
  CHECK_THROWS_AS(distribute(c, Partition{2, {0, 1, 2}, 0.03}), WidthError);
  const Circuit marked(2, {make_marker({0}, GateKind::CX, 0)});
  CHECK_THROWS_AS(distribute(marked, Partition{1, {0, 0}, 0.03}), MarkerPresentError);
}

TEST_CASE("reassemble rejects mismatched markers") {
  const Circuit c = generate(Family::Ghz, 3, 0);
  DistributedCircuit d = distribute(c, Partition{2, {0, 0, 1}, 0.03});
  d.parts[1].circuit = Circuit(1);
  d.parts[1].source_positions.clear();
  d.parts[0].source_positions.clear();
  CHECK_THROWS_AS(reassemble(d), InvalidCircuitError);
}

}  // namespace
}  // namespace qdist
