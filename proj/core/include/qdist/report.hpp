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
 * @file report.hpp
 * @brief Results CSV and aggregate summaries.
 *
 * CSV columns, in order:
 *
 *     circuit_id,width,strategy,k,n1q,n2q,n3q,depth_max,depth_mean,
 *     n_nonlocal,conn_minus_1,compile_time_s
 *
 * Reals are printed with 17 significant digits so a CSV round trip is exact.
 */

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qdist/harness.hpp"

namespace qdist {

inline constexpr std::string_view kCsvHeader =
    "circuit_id,width,strategy,k,n1q,n2q,n3q,depth_max,depth_mean,n_nonlocal,"
    "conn_minus_1,compile_time_s";

void write_csv(std::ostream& out, const std::vector<MetricsRecord>& records);
void write_csv_file(const std::filesystem::path& path,
                    const std::vector<MetricsRecord>& records);

/** Throws CsvError naming the offending line. */
std::vector<MetricsRecord> read_csv(std::istream& in);
/** Throws QdistError if the file cannot be opened. */
std::vector<MetricsRecord> read_csv_file(const std::filesystem::path& path);

/** Nearest power of two in log scale: 2^round(log2(width)). */
std::size_t width_bin(std::size_t width);

struct Statistics {
  std::size_t count = 0;
  double mean = 0.0;
  double median = 0.0;
  /** Sample standard deviation (n - 1); 0 for fewer than two values. */
  double stddev = 0.0;
};

Statistics describe(std::vector<double> values);

struct StrategyTimes {
  EncodingStrategy strategy = EncodingStrategy::Baseline;
  Statistics compile_time_s;
};

struct BinMeans {
  EncodingStrategy strategy = EncodingStrategy::Baseline;
  std::size_t width_bin = 0;
  std::size_t records = 0;
  double n1q = 0, n2q = 0, n3q = 0;
  double depth_max = 0, depth_mean = 0;
  double n_nonlocal = 0, conn_minus_1 = 0;
  double compile_time_s = 0;
  /** Present only when every record in the bin carries it. */
  std::optional<double> depth_max_without_markers;
};

struct Summary {
  std::size_t records_used = 0;
  std::vector<std::string> circuits_used;
  /** Circuits missing some (strategy, k) record present for others. */
  std::vector<std::string> circuits_dropped;
  /** One entry per strategy that appears, in canonical order. */
  std::vector<StrategyTimes> compile_time;
  /** Sorted by strategy, then bin. Means are over circuits and k. */
  std::vector<BinMeans> bins;
};

/**
 * Drops every circuit that lacks a record for some (strategy, k) pair that
 * another of its records uses, then aggregates.
 */
Summary summarize(const std::vector<MetricsRecord>& records);

/** Pretty-printed JSON. Failures and skips are added when non-empty. */
std::string summary_to_json(const Summary& summary,
                            const std::vector<CircuitFailure>& failures = {},
                            const std::vector<SkippedConfiguration>& skipped = {});

}  // namespace qdist
