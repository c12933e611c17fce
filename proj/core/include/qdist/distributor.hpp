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
 * @file distributor.hpp
 * @brief Telegate-based splitting of a partitioned circuit into per-QPU
 *        subcircuits.
 *
 * A gate whose qubits all live in one part is copied into that part's
 * subcircuit. A cut gate becomes one Telegate record plus one marker in every
 * part it touches, placed on that part's participating qubits. No
 * communication qubits are added.
 */

#include <cstddef>
#include <vector>

#include "qdist/circuit.hpp"
#include "qdist/hypergraph.hpp"

namespace qdist {

struct Subcircuit {
  /** Local qubit i is global qubit local_to_global[i]. */
  Circuit circuit;
  std::vector<Qubit> local_to_global;
  /**
   * Source position of every gate in `circuit`. Filled by distribute() and
   * cleared by anything that rewrites the subcircuit.
   */
  std::vector<std::size_t> source_positions;
};

struct Telegate {
  /** The original gate, on global qubits. */
  Gate gate;
  /** Touched parts, ascending. */
  std::vector<PartId> parts;
  /** Index of the gate in the source circuit. */
  std::size_t position = 0;
};

struct DistributedCircuit {
  std::size_t width = 0;
  std::string id;
  std::vector<Subcircuit> parts;
  std::vector<Telegate> telegates;
};

/**
 * Throws MarkerPresentError if the circuit already holds markers and
 * WidthError if the assignment does not cover exactly the circuit's qubits.
 * Local qubits are numbered in ascending global order.
 */
DistributedCircuit distribute(const Circuit& circuit, const Partition& p);

struct DistributedMetrics {
  /** Summed over subcircuits, markers excluded. */
  GateCounts counts;
  std::size_t depth_max = 0;
  double depth_mean = 0.0;
  /** Same aggregates with markers skipped. */
  std::size_t depth_max_without_markers = 0;
  double depth_mean_without_markers = 0.0;
  std::size_t n_nonlocal = 0;
  /** Telegate gates by arity class. */
  GateCounts nonlocal_counts;
};

DistributedMetrics distributed_metrics(const DistributedCircuit& d);

/**
 * Rebuilds a monolithic circuit. When every part still carries its source
 * positions the original gate order is reproduced exactly; otherwise parts
 * are flushed up to each marker group and the telegate's gate is emitted in
 * its place, which preserves the unitary. Throws InvalidCircuitError when
 * markers do not match the telegate records.
 */
Circuit reassemble(const DistributedCircuit& d);

}  // namespace qdist
