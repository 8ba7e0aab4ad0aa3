// Copyright 2026 The poincare Authors
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

#include <random>

#include "poincare/poincare.h"

using namespace poincare;

namespace {

LayerState random_state(int twice, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    return random_mixed(HalfSpin(twice), 2, rng);
}

void BM_Multipoles(benchmark::State &state) {
    LayerState st = random_state(state.range(0), 1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(multipoles(st));
    }
}
BENCHMARK(BM_Multipoles)->Arg(2)->Arg(8)->Arg(20);

void BM_QGrid(benchmark::State &state) {
    PolarizationSector sec = PolarizationSector::single(random_state(state.range(0), 2));
    SphereGrid g = SphereGrid::gauss_legendre();
    for (auto _ : state) {
        benchmark::DoNotOptimize(q_grid(sec, g));
    }
}
BENCHMARK(BM_QGrid)->Arg(2)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_HusimiDegree(benchmark::State &state) {
    PolarizationSector sec = tmsv_sector(0.8);
    for (auto _ : state) {
        benchmark::DoNotOptimize(husimi_degree(sec));
    }
}
BENCHMARK(BM_HusimiDegree);

void BM_Chernoff(benchmark::State &state) {
    PolarizationSector sec = PolarizationSector::single(random_state(state.range(0), 3));
    for (auto _ : state) {
        benchmark::DoNotOptimize(distance_degree(sec, DistanceMetric::chernoff));
    }
}
BENCHMARK(BM_Chernoff)->Arg(4)->Arg(12);

void BM_Distinguishability(benchmark::State &state) {
    PolarizationSector sec = PolarizationSector::single(random_state(2, 4));
    for (auto _ : state) {
        benchmark::DoNotOptimize(distinguishability_degree(sec));
    }
}
BENCHMARK(BM_Distinguishability)->Unit(benchmark::kMillisecond);

void BM_Constellation(benchmark::State &state) {
    std::mt19937_64 rng(5);
    LayerState st = LayerState::from_ket(HalfSpin(state.range(0)), random_ket(HalfSpin(state.range(0)), rng));
    for (auto _ : state) {
        benchmark::DoNotOptimize(constellation(st));
    }
}
BENCHMARK(BM_Constellation)->Arg(4)->Arg(20);

void BM_KingSearch(benchmark::State &state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(search_kings(HalfSpin(4), 2, 10));
    }
}
BENCHMARK(BM_KingSearch)->Unit(benchmark::kMillisecond);

void BM_Reconstruct(benchmark::State &state) {
    int tw = state.range(0);
    LayerState st = random_state(tw, 6);
    auto moments = exact_moments(st, tw);
    for (auto _ : state) {
        benchmark::DoNotOptimize(reconstruct_multipoles(moments, HalfSpin(tw), tw));
    }
}
BENCHMARK(BM_Reconstruct)->Arg(4)->Arg(8);

void BM_Rotate(benchmark::State &state) {
    LayerState st = random_state(state.range(0), 7);
    for (auto _ : state) {
        benchmark::DoNotOptimize(rotate(st, Direction{0.4, 1.2}, 0.9));
    }
}
BENCHMARK(BM_Rotate)->Arg(4)->Arg(20);

}  // namespace

BENCHMARK_MAIN();
