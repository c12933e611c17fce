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


#include <Eigen/QR>
#include <benchmark/benchmark.h>

#include "qdist/kak.hpp"
#include "qdist/random.hpp"

namespace {

qdist::Mat4 random_unitary(qdist::Rng& rng) {
  qdist::Mat4 m;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      m(i, j) = {qdist::standard_normal(rng), qdist::standard_normal(rng)};
  Eigen::HouseholderQR<qdist::Mat4> qr(m);
  return qr.householderQ();
}

void BM_KakDecompose(benchmark::State& state) {
  qdist::Rng rng(1);
  std::vector<qdist::Mat4> us;
  for (int i = 0; i < 64; ++i) us.push_back(random_unitary(rng));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(qdist::kak_decompose(us[i++ % us.size()]));
}
BENCHMARK(BM_KakDecompose);

void BM_KakResynthesize(benchmark::State& state) {
  qdist::Rng rng(2);
  std::vector<qdist::Mat4> us;
  for (int i = 0; i < 64; ++i) us.push_back(random_unitary(rng));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(qdist::kak_resynthesize(us[i++ % us.size()]));
}
BENCHMARK(BM_KakResynthesize);

}  // namespace

BENCHMARK_MAIN();
