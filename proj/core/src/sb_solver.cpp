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

#include "sbopt/sb_solver.hpp"

#include <cmath>
#include <string>

#include "sbopt/errors.hpp"
#include "sbopt/rng.hpp"

namespace sbopt {

void SbConfig::validate() const {
    if (i_max < 1) throw UsageError("SbConfig.i_max must be >= 1");
    if (steps_per_iter < 1) throw UsageError("SbConfig.steps_per_iter must be >= 1");
    if (!(dt > 0.0) || !std::isfinite(dt)) throw UsageError("SbConfig.dt must be > 0");
    if (!std::isfinite(c)) throw UsageError("SbConfig.c must be finite");
    if (restarts < 1) throw UsageError("SbConfig.restarts must be >= 1");
    if (!(x_init_scale >= 0.0) || !std::isfinite(x_init_scale)) {
        throw UsageError("SbConfig.x_init_scale must be >= 0");
    }
    if (!(blow_up_bound > 1.0)) throw UsageError("SbConfig.blow_up_bound must be > 1");
}

double pump(double t, double t_total) {
    if (!(t_total > 0.0)) throw UsageError("pump horizon must be positive");
    if (!(t >= 0.0 && t <= t_total)) {
        throw UsageError("pump time " + std::to_string(t) + " outside [0, " +
                         std::to_string(t_total) + "]");
    }
    return t / t_total;
}

void sb_step_inplace(OscillatorState& state, const IsingForm& ising, double a,
                     const SbConfig& cfg, std::span<double> scratch) {
    const std::size_t n = ising.n;
    if (state.x.size() != n || state.v.size() != n || scratch.size() != n) {
        throw UsageError("oscillator state has dimension " + std::to_string(state.x.size()) +
                         " but the Ising form has dimension " + std::to_string(n));
    }
    if (!(a >= 0.0 && a <= 1.0)) throw UsageError("pump value must lie in [0, 1]");

    // Gradient of the Ising energy at the current positions.
    for (std::size_t i = 0; i < n; ++i) {
        const double* row = ising.couplings.data() + i * n;
        double acc = 0.0;
        for (std::size_t j = 0; j < n; ++j) acc += row[j] * state.x[j];
        scratch[i] = 2.0 * acc + ising.fields[i];
    }

    const double dt = cfg.dt;
    for (std::size_t i = 0; i < n; ++i) {
        const double x = state.x[i];
        const double force = (a - 1.0) * x - x * x * x - cfg.c * scratch[i];
        state.v[i] += dt * force;
    }
    const auto step = static_cast<std::uint64_t>(std::llround(state.t / dt));
    for (std::size_t i = 0; i < n; ++i) {
        state.x[i] += dt * state.v[i];
        if (!(std::abs(state.x[i]) <= cfg.blow_up_bound)) {
            throw InstabilityError(i, step, state.x[i]);
        }
    }
    state.t += dt;
}

OscillatorState sb_step(const OscillatorState& state, const IsingForm& ising, double a,
                        const SbConfig& cfg) {
    OscillatorState next = state;
    std::vector<double> scratch(ising.n);
    sb_step_inplace(next, ising, a, cfg, scratch);
    return next;
}

BinaryVector binarize(std::span<const double> x) {
    BinaryVector bits(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (!std::isfinite(x[i])) {
            throw UsageError("cannot binarize non-finite position at index " + std::to_string(i));
        }
        bits[i] = x[i] > 0.0 ? 1 : 0;
    }
    return bits;
}

OscillatorState initial_state(std::size_t n, const SbConfig& cfg, std::size_t restart) {
    SplitMix64 rng(derive_seed(cfg.seed, restart));
    OscillatorState state;
    state.x.resize(n);
    state.v.assign(n, 0.0);
    for (auto& x : state.x) x = rng.uniform(-cfg.x_init_scale, cfg.x_init_scale);
    return state;
}

SolveResult solve_sb(const QuboMatrix& q, const SbConfig& cfg) {
    cfg.validate();
    const std::size_t n = q.size();

    const double max_abs = q.max_abs_coefficient();
    const double scale = (cfg.normalize && max_abs > 0.0) ? 1.0 / max_abs : 1.0;
    const IsingForm ising = to_ising(scale == 1.0 ? q : q.scaled(scale));

    const double t_total = cfg.total_time();

    TraceRecorder recorder(cfg.seed, TraceRecorder::Mode::dense);
    std::vector<double> scratch(n);
    for (std::size_t r = 0; r < cfg.restarts; ++r) {
        OscillatorState state = initial_state(n, cfg, r);
        std::uint64_t step = 0;
        for (std::size_t it = 0; it < cfg.i_max; ++it) {
            for (std::size_t k = 0; k < cfg.steps_per_iter; ++k, ++step) {
                const double a = pump(static_cast<double>(step) * cfg.dt, t_total);
                sb_step_inplace(state, ising, a, cfg, scratch);
            }
            BinaryVector bits = binarize(state.x);
            recorder.observe(energy(q, bits), bits);
        }
    }
    return std::move(recorder).finish();
}

}  // namespace sbopt
