// Copyright 2026 The graphzeta Authors
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

#include "graphzeta/families.hpp"
#include "graphzeta/oracle.hpp"
#include "graphzeta/roots.hpp"
#include "graphzeta/spectra.hpp"
#include "graphzeta/transfer.hpp"
#include "graphzeta/zeta.hpp"

namespace {

using namespace graphzeta;

void BM_EffectiveDeterminant(benchmark::State& state) {
  const EffectiveMatrix m = build_effective(families::loop_family(3, state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(poly_det(m.matrix));
  state.SetLabel(std::to_string(m.matrix.size()) + "x" + std::to_string(m.matrix.size()));
}
BENCHMARK(BM_EffectiveDeterminant)->DenseRange(1, 8);

void BM_LoopZeta(benchmark::State& state) {
  const CuspidalGraph c = families::loop_family(3, state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(bass_ihara_zeta(c));
}
BENCHMARK(BM_LoopZeta)->DenseRange(1, 8);

void BM_CountingSeries(benchmark::State& state) {
  const ZetaResult z = bass_ihara_zeta(families::loop_family(3, 3));
  for (auto _ : state) benchmark::DoNotOptimize(counting_series(z, static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_CountingSeries)->Arg(12)->Arg(60)->Arg(200);

void BM_TracePowersCuspidal(benchmark::State& state) {
  const CuspidalGraph c = families::loop_family(3, 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(oracle::trace_powers_cuspidal(c, static_cast<std::size_t>(state.range(0))));
  }
}
BENCHMARK(BM_TracePowersCuspidal)->Arg(6)->Arg(12)->Arg(24);

void BM_CycleEnumeration(benchmark::State& state) {
  const auto len = static_cast<std::size_t>(state.range(0));
  const EdgeIndexedGraph g = truncate(families::star(3, {2, 2}), oracle::truncation_depth_for(len));
  for (auto _ : state) benchmark::DoNotOptimize(oracle::enumerate_primitive_cycles(g, len));
}
BENCHMARK(BM_CycleEnumeration)->Arg(6)->Arg(10)->Arg(14);

void BM_PoleReport(benchmark::State& state) {
  const RatFunc z = bass_ihara_zeta(families::loop_family(3, state.range(0))).bass_ihara;
  for (auto _ : state) benchmark::DoNotOptimize(pole_report(z));
}
BENCHMARK(BM_PoleReport)->Arg(1)->Arg(4)->Arg(8);

void BM_Sweep(benchmark::State& state) {
  const std::vector<std::int64_t> ns{1, 2, 3, 4, 5, 6, 7, 8};
  const bool parallel = state.range(0) != 0;
  for (auto _ : state) benchmark::DoNotOptimize(pole_gap_sweep(3, ns, parallel));
}
BENCHMARK(BM_Sweep)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
