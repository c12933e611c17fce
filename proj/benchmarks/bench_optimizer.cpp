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
#include "qdist/optimizer.hpp"

namespace {

template <qdist::Family F>
void BM_Optimize(benchmark::State& state) {
  const qdist::Circuit c = qdist::generate(F, static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(qdist::optimize(c));
  state.counters["gates"] = static_cast<double>(c.size());
}
BENCHMARK_TEMPLATE(BM_Optimize, qdist::Family::Qft)->Arg(16)->Arg(64)->Unit(benchmark::kMillisecond);
BENCHMARK_TEMPLATE(BM_Optimize, qdist::Family::Random)->Arg(16)->Arg(64)->Unit(benchmark::kMillisecond);
BENCHMARK_TEMPLATE(BM_Optimize, qdist::Family::GroverLike)->Arg(16)->Arg(64)->Unit(benchmark::kMillisecond);

void BM_CommutativeCancellation(benchmark::State& state) {
  const qdist::Circuit c = qdist::generate(qdist::Family::Qft, static_cast<std::size_t>(state.range(0)), 0);
  for (auto _ : state) benchmark::DoNotOptimize(qdist::commutative_cancellation(c));
}
BENCHMARK(BM_CommutativeCancellation)->Arg(32)->Arg(128)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
