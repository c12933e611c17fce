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
 * @file partitioner.hpp
 * @brief Balanced k-way hypergraph partitioning (cut-net objective).
 *
 * Multilevel scheme:
 *
 *  1. Coarsen by heavy-net matching until at most 2k vertices remain or
 *     matching stops making progress. Cluster weights are capped so that a
 *     balanced assignment of the coarse vertices stays possible.
 *  2. Partition the coarsest hypergraph several times (largest-first onto
 *     the lightest part, plus seeded greedy growing) and keep the best.
 *  3. Project back level by level, running k-way Fiduccia-Mattheyses
 *     refinement on cut-net gain at every level. Moves never break the
 *     balance bound or empty a part.
 */

#include <cstddef>
#include <cstdint>

#include "qdist/hypergraph.hpp"

namespace qdist {

inline constexpr double kDefaultEpsilon = 0.03;

/**
 * Throws InfeasiblePartitionError when k == 0, k > vertex_count or
 * epsilon < 0. k == 1 is accepted and puts every vertex in part 0.
 * Deterministic in (h, k, epsilon, seed).
 */
Partition partition(const Hypergraph& h, std::size_t k,
                    double epsilon = kDefaultEpsilon, std::uint64_t seed = 0);

}  // namespace qdist
