// Copyright 2026 The eqlc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "eqlc/ff_qlc.hpp"
#include "eqlc/kummer.hpp"
#include "eqlc/mackey.hpp"
#include "eqlc/smith.hpp"

namespace {

void BM_SmithNormalForm(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  eqlc::IntMatrix m(n, n);
  std::uint64_t x = 12345;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      x = x * 6364136223846793005ULL + 1442695040888963407ULL;
      m(i, j) = static_cast<long>((x >> 33) % 201) - 100;
    }
  for (auto _ : state) benchmark::DoNotOptimize(eqlc::smith_normal_form(m));
}
BENCHMARK(BM_SmithNormalForm)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

void BM_BredonCohomology(benchmark::State& state) {
  // Orders with one, two and three distinct primes.
  const auto data = eqlc::ffqlc::k_mackey_finite_field(2, static_cast<std::uint64_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(eqlc::equivariant::bredon_cohomology(data, 0));
}
BENCHMARK(BM_BredonCohomology)->Arg(6)->Arg(12)->Arg(30)->Arg(60);

void BM_CensusBruteForce(benchmark::State& state) {
  const auto r = static_cast<std::size_t>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(eqlc::curves::norm_census(5, {1, 4, 0, 1}, r, eqlc::curves::CensusEngine::kBruteForce));
}
BENCHMARK(BM_CensusBruteForce)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_CensusClosedPoints(benchmark::State& state) {
  const auto r = static_cast<std::size_t>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(eqlc::curves::norm_census(5, {1, 4, 0, 1}, r, eqlc::curves::CensusEngine::kClosedPoints));
}
BENCHMARK(BM_CensusClosedPoints)->Arg(6)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_SeriesExp(benchmark::State& state) {
  const auto census = eqlc::curves::norm_census(7, {1, 6, 0, 1}, 12);
  const auto L = eqlc::curves::l_series_kummer(census, 6, 1);
  const auto log = L.log();
  for (auto _ : state) benchmark::DoNotOptimize(log.exp());
}
BENCHMARK(BM_SeriesExp)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
