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
#include <span>
#include <vector>

#include "sbopt/qubo.hpp"
#include "sbopt/solve_result.hpp"

namespace sbopt {

/// Simulated Bifurcation settings. One "iteration" is steps_per_iter
/// integration steps followed by exactly one objective evaluation of the
/// binarized snapshot.
struct SbConfig {
    std::size_t i_max = 100;
    std::size_t steps_per_iter = 50;
    double dt = 0.05;
    double c = 0.5;
    std::size_t restarts = 1;
    std::uint64_t seed = 0;
    double x_init_scale = 0.1;
    double blow_up_bound = 10.0;
    /// Rescale the objective so max |Q_ij| == 1 before integrating. Energies
    /// are always reported on the caller's matrix.
    bool normalize = true;

    void validate() const;
    double total_time() const noexcept {
        return static_cast<double>(i_max * steps_per_iter) * dt;
    }
};

struct OscillatorState {
    std::vector<double> x;
    std::vector<double> v;
    double t = 0.0;
};

/// Linear pump a(t) = t / t_total.
double pump(double t, double t_total);

/// One symplectic Euler step of
///   v_i += dt * [(a - 1) x_i - x_i^3 - c (2 sum_j J_ij x_j + h_i)]
///   x_i += dt * v_i
/// i.e. the coupling is -c times the gradient of the Ising energy.
/// Throws InstabilityError if any |x_i| exceeds cfg.blow_up_bound.
OscillatorState sb_step(const OscillatorState& state, const IsingForm& ising, double a,
                        const SbConfig& cfg);

/// In-place variant used by the solver loop; ``scratch`` must have size n.
void sb_step_inplace(OscillatorState& state, const IsingForm& ising, double a,
                     const SbConfig& cfg, std::span<double> scratch);

/// bit_i = 1 iff x_i > 0.
BinaryVector binarize(std::span<const double> x);

/// Initial state of restart ``restart``: x ~ U(-scale, scale) drawn from
/// derive_seed(cfg.seed, restart), v = 0.
OscillatorState initial_state(std::size_t n, const SbConfig& cfg, std::size_t restart);

SolveResult solve_sb(const QuboMatrix& q, const SbConfig& cfg);

}  // namespace sbopt
