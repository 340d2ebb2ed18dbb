// Copyright 2026 The Volcano Authors.
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


// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include "volcano/cli/scene.h"
#include "volcano/verify.h"

namespace {

using volcano::Exec;

const volcano::Prismatoid& Mouse() {
  static const volcano::Prismatoid prism =
      volcano::cli::build_prismatoid(volcano::cli::preset_scene("rounded_square_in_mouse"))
          .with_height(1.0);
  return prism;
}

Exec ExecOf(const benchmark::State& state) {
  return state.range(1) == 0 ? Exec::serial : Exec::parallel;
}

void BM_SampleRibs(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(volcano::sample_ribs(Mouse(), state.range(0), 0.0, ExecOf(state)));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_ScanRibDistance(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(volcano::scan_rib_distance(Mouse(), state.range(0), ExecOf(state)));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_SelfIntersect(benchmark::State& state) {
  const auto poly = volcano::sample_unfolding(Mouse(), state.range(0)).polyline();
  for (auto _ : state)
    benchmark::DoNotOptimize(volcano::polyline_self_intersect(poly, ExecOf(state)));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_RibsDisjoint(benchmark::State& state) {
  const auto ribs = volcano::sample_unfolding(Mouse(), state.range(0)).rib_segments();
  for (auto _ : state)
    benchmark::DoNotOptimize(volcano::ribs_pairwise_disjoint(ribs, ExecOf(state)));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_FullReport(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(volcano::full_report(Mouse(), state.range(0), ExecOf(state)));
}

// Second argument: 0 serial reference, 1 OpenMP.
BENCHMARK(BM_SampleRibs)->ArgsProduct({{1024, 8192}, {0, 1}});
BENCHMARK(BM_ScanRibDistance)->ArgsProduct({{8192, 65536}, {0, 1}});
BENCHMARK(BM_SelfIntersect)->ArgsProduct({{1024, 8192}, {0, 1}});
BENCHMARK(BM_RibsDisjoint)->ArgsProduct({{1024, 8192}, {0, 1}});
BENCHMARK(BM_FullReport)->ArgsProduct({{1024}, {0, 1}})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
