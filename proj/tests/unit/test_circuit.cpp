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

#include <algorithm>
#include <catch_amalgamated.hpp>
#include <numeric>

#include "oracles.hpp"
#include "qdist/circuit.hpp"
#include "qdist/corpus.hpp"
#include "qdist/errors.hpp"

namespace qdist {
namespace {

using testing::dag_depth;

TEST_CASE("Gate kinds have fixed arity and parameter counts") {
  CHECK(arity(GateKind::H) == 1);
  CHECK(arity(GateKind::CX) == 2);
  CHECK(arity(GateKind::CCX) == 3);
  CHECK(param_count(GateKind::RZ) == 1);
  CHECK(param_count(GateKind::U3) == 3);
  CHECK(param_count(GateKind::SWAP) == 0);
  for (std::size_t i = 0; i + 1 < kGateKindCount; ++i) {
    const auto k = static_cast<GateKind>(i);
    CHECK(gate_kind_from_name(gate_name(k)) == k);
  }
  CHECK_FALSE(gate_kind_from_name("foo").has_value());
  // Markers are not a user-facing gate name.
  CHECK_FALSE(gate_kind_from_name("telegate").has_value());
}

TEST_CASE("make_gate validates arity and parameters") {
  CHECK_NOTHROW(make_gate(GateKind::CX, {0, 1}));
  CHECK_THROWS_AS(make_gate(GateKind::CX, {0}), InvalidCircuitError);
  CHECK_THROWS_AS(make_gate(GateKind::RZ, {0}), InvalidCircuitError);
  CHECK_THROWS_AS(make_gate(GateKind::H, {0}, {0.1}), InvalidCircuitError);
  CHECK_THROWS_AS(make_gate(GateKind::TelegateMarker, {0}), InvalidCircuitError);
}

TEST_CASE("Circuit rejects malformed gates") {
  Circuit c(2);
  CHECK_THROWS_AS(c.add(GateKind::CX, {0, 0}), InvalidCircuitError);
  CHECK_THROWS_AS(c.add(GateKind::H, {2}), InvalidCircuitError);
  CHECK_THROWS_AS(Circuit(0), InvalidCircuitError);
  CHECK_THROWS_AS(make_marker({}, GateKind::CX, 0), InvalidCircuitError);
  CHECK_THROWS_AS(make_marker({0, 1, 2, 3}, GateKind::CX, 0), InvalidCircuitError);
  CHECK(c.empty());
}

TEST_CASE("depth examples") {
  CHECK(depth(Circuit(3)) == 0);

  Circuit chain(1);
  for (int i = 0; i < 5; ++i) chain.add(GateKind::RZ, {0}, {0.1 * i});
  CHECK(depth(chain) == 5);

  Circuit c(2);
  c.add(GateKind::H, {0}).add(GateKind::H, {1}).add(GateKind::CX, {0, 1});
  CHECK(depth(c) == 2);
  CHECK(dag_depth(c) == 2);
}

TEST_CASE("markers occupy one layer and are counted separately") {
  Circuit c(2);
  c.add(GateKind::H, {0});
  c.add(make_marker({0}, GateKind::CX, 0));
  c.add(GateKind::H, {0});
  CHECK(depth(c) == 3);
  CHECK(depth_without_markers(c) == 2);
  const auto counts = gate_counts(c);
  CHECK(counts.one_qubit == 2);
  CHECK(counts.markers == 1);
  CHECK(counts.total() + counts.markers == c.size());
  CHECK(c.has_markers());
}

TEST_CASE("gate_counts examples") {
  const auto ghz = gate_counts(generate(Family::Ghz, 4, 0));
  CHECK(ghz == GateCounts{1, 3, 0, 0});
  Circuit c(3);
  c.add(GateKind::CCX, {0, 1, 2});
  CHECK(gate_counts(c) == GateCounts{0, 0, 1, 0});
}

TEST_CASE("depth and counts properties on random circuits") {
  Rng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t width = 1 + uniform_index(rng, 8);
    const Circuit c = testing::random_circuit(width, uniform_index(rng, 40), rng);
    const std::size_t d = depth(c);
    CHECK(d == dag_depth(c));
    CHECK(d <= c.size());
    std::vector<std::size_t> per_qubit(width, 0);
    for (const auto& g : c.gates())
      for (auto q : g.qubits) ++per_qubit[q];
    CHECK(d >= *std::max_element(per_qubit.begin(), per_qubit.end()));
    const auto counts = gate_counts(c);
    CHECK(counts.total() + counts.markers == c.size());

    // Relabelling qubits changes neither metric.
    std::vector<Qubit> perm(width);
    std::iota(perm.begin(), perm.end(), 0);
    shuffle(perm, rng);
    Circuit relabelled(width);
    for (auto g : c.gates()) {
      for (auto& q : g.qubits) q = perm[q];
      relabelled.add(g);
    }
    CHECK(depth(relabelled) == d);
    CHECK(gate_counts(relabelled) == counts);

    // Appending never decreases depth or any count.
    Circuit longer = c;
    longer.add(GateKind::H, {static_cast<Qubit>(uniform_index(rng, width))});
    CHECK(depth(longer) >= d);
    CHECK(gate_counts(longer).one_qubit == counts.one_qubit + 1);
  }
}

TEST_CASE("same_gates ignores the id") {
  Circuit a(2, "a"), b(2, "b");
  a.add(GateKind::H, {0});
  b.add(GateKind::H, {0});
  CHECK(a.same_gates(b));
  b.add(GateKind::H, {1});
  CHECK_FALSE(a.same_gates(b));
}

}  // namespace
}  // namespace qdist
