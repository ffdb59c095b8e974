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
#include <optional>
#include <utility>

#include "sbopt/qubo.hpp"
#include "sbopt/rng.hpp"
#include "sbopt/solve_result.hpp"

namespace sbopt {

/// Single-flip Metropolis annealing with geometric per-sweep cooling.
struct SaConfig {
    /// Defaults to 2 * max |Q_ij| (1.0 for the zero matrix).
    std::optional<double> initial_temperature;
    double cooling_ratio = 0.995;
    std::size_t sweeps = 200;
    std::uint64_t seed = 0;
    std::size_t restarts = 1;

    void validate() const;
    double resolved_initial_temperature(const QuboMatrix& q) const;
};

/// Metropolis rule: accept if delta <= 0, else with probability exp(-delta / T).
bool metropolis_accept(double delta, double temperature, SplitMix64& rng);

/// Every candidate delta computation counts as one evaluation, so
/// evals == restarts * sweeps * n.
SolveResult solve_sa(const QuboMatrix& q, const SaConfig& cfg);

inline constexpr std::size_t kBruteForceMaxBits = 24;

/// Exhaustive minimum over all 2^n assignments. Ties (within the library's
/// relative tolerance) go to the smallest integer code with bit 0 least
/// significant. Throws RefusalError for n > kBruteForceMaxBits.
std::pair<BinaryVector, double> brute_force(const QuboMatrix& q);

}  // namespace sbopt
