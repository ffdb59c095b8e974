// Copyright 2026 The sbopt Authors
//
//    Licensed under the Apache License, Version 2.0 (the "License");
//    you may not use this file except in compliance with the License.
//    You may obtain a copy of the License at
//
//        http://www.apache.org/licenses/LICENSE-2.0
//
//    Unless required by applicable law or agreed to in writing, software
//    distributed under the License is distributed on an "AS IS" BASIS,
//    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//    See the License for the specific language governing permissions and
//    limitations under the License.

#include <benchmark/benchmark.h>

#include <vector>

#include "sbopt/baselines.hpp"
#include "sbopt/carbon.hpp"
#include "sbopt/instance_gen.hpp"
#include "sbopt/qubo.hpp"
#include "sbopt/rng.hpp"
#include "sbopt/sb_solver.hpp"
#include "sbopt/scheduler.hpp"

namespace {

using namespace sbopt;

QuboMatrix random_qubo(std::size_t n, std::uint64_t seed) {
    SplitMix64 rng(seed);
    std::vector<double> v(n * n);
    for (double& x : v) x = rng.uniform(-1.0, 1.0);
    return QuboMatrix::from_dense(n, v);
}

SchedulingInstance suite_instance(std::size_t compressors, std::size_t dr, std::size_t horizon) {
    GenParams p;
    p.seed = 100;
    p.compressors = compressors;
    p.dr_loads = dr;
    p.horizon = horizon;
    p.start_hour = 6;
    p.days = 1;
    p.customers = 1;
    return gen_scheduling_instance(p);
}

void BM_Energy(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const QuboMatrix q = random_qubo(n, 1);
    SplitMix64 rng(2);
    BinaryVector s(n);
    for (auto& b : s) b = static_cast<std::uint8_t>(rng.below(2));
    for (auto _ : state) benchmark::DoNotOptimize(energy(q, s));
}
BENCHMARK(BM_Energy)->Arg(72)->Arg(288)->Arg(1024);

void BM_DeltaEnergy(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const QuboMatrix q = random_qubo(n, 1);
    BinaryVector s(n, 0);
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(delta_energy(q, s, i));
        i = (i + 1) % n;
    }
}
BENCHMARK(BM_DeltaEnergy)->Arg(72)->Arg(288)->Arg(1024);

void BM_SbStep(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const IsingForm ising = to_ising(random_qubo(n, 3));
    SbConfig cfg;
    OscillatorState x = initial_state(n, cfg, 0);
    std::vector<double> scratch(n);
    for (auto _ : state) {
        sb_step_inplace(x, ising, 0.5, cfg, scratch);
        x.t = 0.0;
    }
    state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_SbStep)->Arg(72)->Arg(288)->Arg(1024);

void BM_SolveSb(benchmark::State& state) {
    const auto inst = suite_instance(2, 4, 12);
    const QuboMatrix q = build_qubo(inst, calibrate_penalties(inst, 5e-4));
    SbConfig cfg;
    cfg.steps_per_iter = 20;
    for (auto _ : state) benchmark::DoNotOptimize(solve_sb(q, cfg).best_energy);
}
BENCHMARK(BM_SolveSb)->Unit(benchmark::kMillisecond);

void BM_SolveSa(benchmark::State& state) {
    const auto inst = suite_instance(2, 4, 12);
    const QuboMatrix q = build_qubo(inst, calibrate_penalties(inst, 5e-4));
    SaConfig cfg;
    cfg.sweeps = 500;
    cfg.cooling_ratio = 0.98;
    for (auto _ : state) benchmark::DoNotOptimize(solve_sa(q, cfg).best_energy);
}
BENCHMARK(BM_SolveSa)->Unit(benchmark::kMillisecond);

void BM_BuildQubo(benchmark::State& state) {
    const auto inst = suite_instance(4, 8, static_cast<std::size_t>(state.range(0)));
    const PenaltyWeights w = calibrate_penalties(inst, 5e-4);
    for (auto _ : state) benchmark::DoNotOptimize(build_qubo(inst, w).size());
}
BENCHMARK(BM_BuildQubo)->Arg(12)->Arg(24);

void BM_BruteForce16(benchmark::State& state) {
    const QuboMatrix q = random_qubo(16, 4);
    for (auto _ : state) benchmark::DoNotOptimize(brute_force(q).second);
}
BENCHMARK(BM_BruteForce16)->Unit(benchmark::kMillisecond);

void BM_AttributeAggregate(benchmark::State& state) {
    GenParams p;
    p.customers = 1;
    const auto intensity = gen_carbon_intensity(p);
    const auto energy_series = gen_consumption_panel(p).front();
    for (auto _ : state) {
        const auto em = attribute(energy_series, intensity);
        benchmark::DoNotOptimize(aggregate(em, Bucket::daily).size());
    }
}
BENCHMARK(BM_AttributeAggregate);

}  // namespace

BENCHMARK_MAIN();
