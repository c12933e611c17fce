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

#pragma once

/**
 * @file hypergraph.hpp
 * @brief Qubit-dependency hypergraph and k-way partition cost functions.
 *
 * Qubits are vertices; every multi-qubit gate is a hyperedge over its
 * qubits. Gates with the same qubit set are merged into a single weighted
 * net.
 */

#include <cstddef>
#include <cstdint>
#include <vector>

#include "qdist/circuit.hpp"

namespace qdist {

using Vertex = std::uint32_t;
using PartId = std::uint32_t;

struct Net {
  /** Sorted, distinct. */
  std::vector<Vertex> vertices;
  std::uint64_t weight = 1;
  bool operator==(const Net&) const = default;
};

struct Hypergraph {
  std::size_t vertex_count = 0;
  std::vector<Net> nets;

  std::uint64_t total_weight() const;
  /** Throws InvalidCircuitError on a malformed net. */
  void validate() const;
};

/**
 * One net per distinct support of a multi-qubit gate, in order of first
 * appearance. Single-qubit gates and markers contribute nothing.
 */
Hypergraph build_hypergraph(const Circuit& circuit);

/** A k-way vertex assignment. */
struct Partition {
  std::size_t k = 1;
  std::vector<PartId> assignment;
  double epsilon = 0.03;

  std::vector<std::size_t> part_sizes() const;
  std::size_t max_part_size() const;
};

/** ceil((1 + epsilon) * vertex_count / k). */
std::size_t balance_bound(std::size_t vertex_count, std::size_t k, double epsilon);

/** Parts are nonempty (when k <= vertex_count) and within balance_bound. */
bool is_balanced(const Partition& p);

/** Sum of weights of nets spanning two or more parts. */
std::uint64_t cut_cost(const Hypergraph& h, const Partition& p);

/** Sum over nets of weight * (parts touched - 1). */
std::uint64_t connectivity_minus_1(const Hypergraph& h, const Partition& p);

}  // namespace qdist
