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
 * @file optimizer.hpp
 * @brief Unitary-preserving rewrite passes and the fixpoint driver.
 *
 * All passes treat telegate markers as barriers on the qubits they touch:
 * nothing is cancelled, merged or commuted across a marker, and markers are
 * never moved or removed.
 */

#include <cstddef>
#include <string>
#include <vector>

#include "qdist/circuit.hpp"
#include "qdist/unitary.hpp"

namespace qdist {

struct PassReport {
  std::string pass;
  GateCounts before;
  GateCounts after;
  std::size_t depth_before = 0;
  std::size_t depth_after = 0;
  /** Sweeps until the pass reached its own fixpoint; always >= 1. */
  std::size_t iterations = 1;
  bool changed = false;
};

struct PassResult {
  Circuit circuit;
  PassReport report;
};

/** Angles closer than this to zero (after wrapping) are the identity. */
inline constexpr double kAngleTolerance = 1e-12;

/** g followed by h is the identity (up to phase) on the same qubits. */
bool is_inverse_pair(const Gate& g, const Gate& h);

/**
 * Sufficient commutation test. Gates on disjoint qubits commute. Otherwise
 * each shared qubit must be acted on "along the same axis" by both gates:
 * Z-type (diagonal 1Q gates, CX/CCX controls, either CZ qubit), X-type (X,
 * RX, CX/CCX targets) or Y-type (Y, RY). Markers commute with nothing they
 * overlap.
 */
bool commutes(const Gate& g, const Gate& h);

/** Removes adjacent inverse pairs until none remain. */
PassResult cancel_inverse_pairs(const Circuit& circuit);

/**
 * Removes inverse pairs separated only by gates that commute with them.
 */
PassResult commutative_cancellation(const Circuit& circuit);

/**
 * Merges adjacent same-axis rotations (RX, RY, RZ) on a qubit; merged angles
 * are wrapped to (-pi, pi] and dropped when within kAngleTolerance of zero.
 */
PassResult merge_rotations(const Circuit& circuit);

/** A maximal run of 1Q/2Q gates confined to one qubit pair. */
struct TwoQubitBlock {
  Qubit first = 0;
  Qubit second = 0;
  /** Source positions, ascending. */
  std::vector<std::size_t> gate_indices;
  std::size_t two_qubit_gates = 0;
  /** Product of the block with `first` as the most significant qubit. */
  Mat4 unitary = Mat4::Identity();
};

/**
 * Collects blocks. CCX gates and markers end every block they touch. Blocks
 * with fewer than two 2Q gates are included; callers filter.
 */
std::vector<TwoQubitBlock> collect_blocks(const Circuit& circuit);

/**
 * Replaces each block holding at least two 2Q gates by its KAK resynthesis
 * when that is strictly better: no more 2Q gates, no more gates overall, and
 * fewer of at least one.
 */
PassResult collect_and_resynthesize_blocks(const Circuit& circuit);

inline constexpr std::size_t kMaxOptimizeIterations = 10;

struct OptimizeResult {
  Circuit circuit;
  std::vector<PassReport> reports;
  /** Loop iterations over the full pass sequence; always >= 1. */
  std::size_t iterations = 0;
};

/**
 * Runs [cancel_inverse_pairs, merge_rotations, commutative_cancellation,
 * collect_and_resynthesize_blocks] until a full loop changes nothing or
 * `max_iterations` loops have run.
 */
OptimizeResult optimize(const Circuit& circuit,
                        std::size_t max_iterations = kMaxOptimizeIterations);

}  // namespace qdist
