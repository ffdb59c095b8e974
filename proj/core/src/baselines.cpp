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

#include "sbopt/baselines.hpp"

#include <bit>
#include <cmath>
#include <numeric>
#include <string>
#include <vector>

#include "sbopt/errors.hpp"

namespace sbopt {

void SaConfig::validate() const {
    if (initial_temperature && !(*initial_temperature > 0.0 && std::isfinite(*initial_temperature))) {
        throw UsageError("SaConfig.initial_temperature must be > 0");
    }
    if (!(cooling_ratio > 0.0 && cooling_ratio < 1.0)) {
        throw UsageError("SaConfig.cooling_ratio must lie in (0, 1)");
    }
    if (sweeps < 1) throw UsageError("SaConfig.sweeps must be >= 1");
    if (restarts < 1) throw UsageError("SaConfig.restarts must be >= 1");
}

double SaConfig::resolved_initial_temperature(const QuboMatrix& q) const {
    if (initial_temperature) return *initial_temperature;
    const double t0 = 2.0 * q.max_abs_coefficient();
    return t0 > 0.0 ? t0 : 1.0;
}

bool metropolis_accept(double delta, double temperature, SplitMix64& rng) {
    if (delta <= 0.0) return true;
    return rng.uniform() < std::exp(-delta / temperature);
}

SolveResult solve_sa(const QuboMatrix& q, const SaConfig& cfg) {
    cfg.validate();
    const std::size_t n = q.size();
    const double t0 = cfg.resolved_initial_temperature(q);

    TraceRecorder recorder(cfg.seed);
    std::vector<std::size_t> order(n);
    for (std::size_t r = 0; r < cfg.restarts; ++r) {
        SplitMix64 rng(derive_seed(cfg.seed, r));
        BinaryVector s(n);
        for (auto& b : s) b = static_cast<std::uint8_t>(rng.next() >> 63);
        double current = energy(q, s);
        // The starting point is not a search evaluation; it only seeds the incumbent.
        recorder.offer(current, s);

        double temperature = t0;
        for (std::size_t sweep = 0; sweep < cfg.sweeps; ++sweep) {
            std::iota(order.begin(), order.end(), std::size_t{0});
            rng.shuffle(std::span<std::size_t>(order));
            for (std::size_t i : order) {
                const double delta = delta_energy(q, s, i);
                if (metropolis_accept(delta, temperature, rng)) {
                    s[i] ^= 1U;
                    current += delta;
                    if (current < recorder.best_energy()) {
                        // Resynchronise so the incumbent carries its exact energy.
                        current = energy(q, s);
                        recorder.observe(current, s);
                        continue;
                    }
                }
                recorder.count();
            }
            temperature *= cfg.cooling_ratio;
        }
    }
    return std::move(recorder).finish();
}

std::pair<BinaryVector, double> brute_force(const QuboMatrix& q) {
    const std::size_t n = q.size();
    if (n > kBruteForceMaxBits) {
        throw RefusalError("brute force refuses n = " + std::to_string(n) + " (limit " +
                           std::to_string(kBruteForceMaxBits) + ")");
    }
    // Gray-code walk: each step flips one bit and updates the energy by its
    // delta. The running value is resynchronised periodically and candidates
    // near the incumbent are re-evaluated exactly before comparison.
    BinaryVector s(n, 0);
    double current = energy(q, s);
    std::uint64_t best_code = 0;
    double best = current;

    const std::uint64_t count = std::uint64_t{1} << n;
    for (std::uint64_t k = 1; k < count; ++k) {
        const auto bit = static_cast<std::size_t>(std::countr_zero(k));
        current += delta_energy(q, s, bit);
        s[bit] ^= 1U;
        if ((k & 0xfffU) == 0) current = energy(q, s);

        const std::uint64_t code = k ^ (k >> 1);
        if (current <= best + 1e-6 * (1.0 + std::abs(best))) {
            const double exact = energy(q, s);
            current = exact;
            if (nearly_equal(exact, best)) {
                if (code < best_code) best_code = code;
            } else if (exact < best) {
                best = exact;
                best_code = code;
            }
        }
    }
    BinaryVector bits = bits_from_code(best_code, n);
    return {bits, energy(q, bits)};
}

}  // namespace sbopt
