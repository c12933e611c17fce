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


#include <benchmark/benchmark.h>

#include "qdist/corpus.hpp"
#include "qdist/partitioner.hpp"

namespace {

void BM_Partition(benchmark::State& state) {
  const auto width = static_cast<std::size_t>(state.range(0));
  const auto k = static_cast<std::size_t>(state.range(1));
  const qdist::Hypergraph h = qdist::build_hypergraph(qdist::generate(qdist::Family::Random, width, 1));
  for (auto _ : state) benchmark::DoNotOptimize(qdist::partition(h, k, qdist::kDefaultEpsilon, 7));
  state.counters["nets"] = static_cast<double>(h.nets.size());
}
BENCHMARK(BM_Partition)
    ->Args({16, 2})
    ->Args({64, 4})
    ->Args({128, 2})
    ->Args({128, 10})
    ->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
