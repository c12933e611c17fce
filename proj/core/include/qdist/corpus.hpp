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
 * @file corpus.hpp
 * @brief Deterministic benchmark-circuit generators.
 *
 * Six families stand in for an algorithm benchmark suite. `qaoa_ring` and
 * `grover_like` reproduce the structure of those algorithms (a ring of ZZ
 * interactions, Toffoli-ladder oracles and diffusion blocks) rather than
 * their exact semantics. `random` draws 10 x width gates uniformly from
 * {H, T, RZ, CX, CCX} on uniformly chosen distinct qubits (CCX is left out
 * of the draw below three qubits).
 */

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qdist/circuit.hpp"

namespace qdist {

enum class Family { Ghz, WChain, Qft, QaoaRing, GroverLike, Random };

std::string_view family_name(Family f);
std::optional<Family> family_from_name(std::string_view name);
std::vector<Family> all_families();

inline constexpr std::size_t kMinCorpusWidth = 2;
inline constexpr std::size_t kMaxCorpusWidth = 130;

/** Throws WidthError when width < 2. */
Circuit generate(Family family, std::size_t width, std::uint64_t seed);

struct CorpusSpec {
  std::vector<Family> families = all_families();
  std::vector<std::size_t> widths;
  /** One random instance per seed and width. */
  std::vector<std::uint64_t> random_seeds = {1, 2, 3};
  /** Seed for the non-random families (angles of qaoa_ring). */
  std::uint64_t seed = 0;
};

/** Every family, widths 2, 4, ..., 128, three random seeds. */
CorpusSpec default_corpus_spec(std::uint64_t seed = 0);

/** Ordered by family, then width, then seed. Throws WidthError. */
std::vector<Circuit> generate_corpus(const CorpusSpec& spec);

/** Writes `<id>.qasm` per circuit; returns the paths written. */
std::vector<std::filesystem::path> write_corpus(
    const std::vector<Circuit>& corpus, const std::filesystem::path& dir);

/** Reads every `*.qasm` file in `dir`, sorted by file name. */
std::vector<Circuit> load_corpus(const std::filesystem::path& dir);

}  // namespace qdist
