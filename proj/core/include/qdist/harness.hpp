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
 * @file harness.hpp
 * @brief The four compilation encodings and the benchmark sweep.
 *
 *   Baseline  partition -> distribute
 *   Global    optimize -> partition -> distribute
 *   Local     partition -> distribute -> optimize every subcircuit
 *   Hybrid    optimize -> partition -> distribute -> optimize every subcircuit
 *
 * Each encoding partitions exactly once. Local optimisation sees telegate
 * markers as barriers, so it cannot change which gates are non-local.
 */

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qdist/circuit.hpp"
#include "qdist/distributor.hpp"
#include "qdist/hypergraph.hpp"
#include "qdist/partitioner.hpp"

namespace qdist {

enum class EncodingStrategy { Baseline, Global, Local, Hybrid };

/** "baseline", "global", "local", "hybrid". */
std::string_view strategy_name(EncodingStrategy s);
std::optional<EncodingStrategy> strategy_from_name(std::string_view name);
const std::array<EncodingStrategy, 4>& all_strategies();

struct MetricsRecord {
  std::string circuit_id;
  std::size_t width = 0;
  EncodingStrategy strategy = EncodingStrategy::Baseline;
  std::size_t k = 0;
  std::size_t n1q = 0;
  std::size_t n2q = 0;
  std::size_t n3q = 0;
  std::size_t depth_max = 0;
  double depth_mean = 0.0;
  std::size_t n_nonlocal = 0;
  std::uint64_t conn_minus_1 = 0;
  double compile_time_s = 0.0;
  /** Marker-exclusive depths; not part of the CSV schema. */
  std::optional<std::size_t> depth_max_without_markers;
  std::optional<double> depth_mean_without_markers;

  /** Every CSV field except compile_time_s is equal. */
  bool same_metrics(const MetricsRecord& other) const;
};

/** Everything one encoding run produced. */
struct EncodingOutcome {
  MetricsRecord record;
  /** The circuit that was partitioned (optimised for Global/Hybrid). */
  Circuit partitioned;
  Hypergraph hypergraph;
  Partition partition;
  /** Final distributed circuit, after local optimisation if any. */
  DistributedCircuit distributed;
  DistributedMetrics metrics;
};

/**
 * Runs one encoding and times it end to end with a monotonic clock.
 * Throws InfeasiblePartitionError when k > circuit width.
 */
EncodingOutcome run_encoding(const Circuit& circuit, EncodingStrategy strategy,
                             std::size_t k, double epsilon = kDefaultEpsilon,
                             std::uint64_t seed = 0);

inline constexpr std::uint64_t kDefaultSeed = 20240601;

struct RunConfig {
  std::vector<std::size_t> qpu_counts = {2, 3, 4, 5, 6, 7, 8, 9, 10};
  double epsilon = kDefaultEpsilon;
  std::uint64_t seed = kDefaultSeed;
  /** Empty means all four. */
  std::vector<EncodingStrategy> strategies;
  /** Timed runs per record; the minimum is reported. */
  std::size_t timing_repeats = 3;
  /** Threads for the untimed metrics phase. Timing is always serial. */
  std::size_t jobs = 1;

  /** Throws QdistError on k < 2, epsilon < 0 or zero repeats/jobs. */
  void validate() const;
  std::vector<EncodingStrategy> effective_strategies() const;
};

struct CircuitFailure {
  std::string circuit_id;
  std::string message;
};

struct SkippedConfiguration {
  std::string circuit_id;
  std::size_t width = 0;
  std::size_t k = 0;
};

struct BenchmarkResult {
  /** Ordered by circuit, then k, then strategy (configuration order). */
  std::vector<MetricsRecord> records;
  /** Circuits that failed any strategy; none of their records are kept. */
  std::vector<CircuitFailure> failures;
  /** k > width combinations that were not run. */
  std::vector<SkippedConfiguration> skipped;
};

using ProgressCallback = std::function<void(const std::string& circuit_id)>;

/** Throws QdistError on an empty corpus or an invalid config. */
BenchmarkResult run_benchmark(const std::vector<Circuit>& corpus, const RunConfig& cfg,
                              const ProgressCallback& progress = {});

struct VerifyFailure {
  std::string circuit_id;
  std::string stage;
  std::size_t k = 0;
  std::string message;
};

struct VerifyReport {
  std::size_t circuits = 0;
  std::size_t checks = 0;
  std::vector<VerifyFailure> failures;
};

inline constexpr double kEquivalenceTolerance = 1e-7;

/**
 * Semantic-preservation oracle. For every circuit no wider than max_width:
 * optimize(c) alone, then every strategy at every configured k, reassembled
 * into one circuit, must equal c up to global phase within tol.
 */
VerifyReport verify_corpus(const std::vector<Circuit>& corpus, const RunConfig& cfg,
                           std::size_t max_width = 10,
                           double tol = kEquivalenceTolerance);

}  // namespace qdist
