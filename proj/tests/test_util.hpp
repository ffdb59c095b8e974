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

#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "sbopt/instance_gen.hpp"
#include "sbopt/qubo.hpp"
#include "sbopt/rng.hpp"
#include "sbopt/scheduler.hpp"

namespace sbopt::testing {

/// Dense n x n matrix with every entry Uniform(lo, hi), not symmetrized.
inline std::vector<double> random_dense(std::size_t n, SplitMix64& rng, double lo = -1.0,
                                        double hi = 1.0) {
    std::vector<double> values(n * n);
    for (double& v : values) v = rng.uniform(lo, hi);
    return values;
}

inline QuboMatrix random_qubo(std::size_t n, std::uint64_t seed) {
    SplitMix64 rng(seed);
    return QuboMatrix::from_dense(n, random_dense(n, rng));
}

inline BinaryVector random_bits(std::size_t n, SplitMix64& rng) {
    BinaryVector bits(n);
    for (auto& b : bits) b = static_cast<std::uint8_t>(rng.below(2));
    return bits;
}

/// Small generated instance: compressors x horizon + dr x horizon bits.
inline SchedulingInstance small_instance(std::uint64_t seed, std::size_t compressors,
                                         std::size_t dr_loads, std::size_t horizon) {
    GenParams p;
    p.seed = seed;
    p.compressors = compressors;
    p.dr_loads = dr_loads;
    p.horizon = horizon;
    p.start_hour = 6;
    p.days = 1;
    p.customers = 1;
    return gen_scheduling_instance(p);
}

/// 1 compressor, 1 interval: price 0.10, lambda 500, 100 kWh, capacity 100, demand 100.
inline SchedulingInstance single_compressor_instance() {
    SchedulingInstance inst;
    inst.horizon = 1;
    inst.interval_hours = 1.0;
    inst.compressors.push_back({"C0", 100.0, 100.0});
    inst.price = {0.10};
    inst.demand = {100.0};
    inst.carbon.values = {500.0};
    inst.carbon.interval_hours = 1.0;
    return inst;
}

}  // namespace sbopt::testing
