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

#include <cstdint>
#include <limits>
#include <vector>

#include "sbopt/qubo.hpp"

namespace sbopt {

/// Best-so-far energy after a cumulative number of objective evaluations.
struct TracePoint {
    std::uint64_t evals;
    double best_energy;

    friend bool operator==(const TracePoint&, const TracePoint&) = default;
};

struct SolveResult {
    BinaryVector best_bits;
    double best_energy = std::numeric_limits<double>::infinity();
    std::vector<TracePoint> trace;
    std::uint64_t evals = 0;
    std::uint64_t seed = 0;

    friend bool operator==(const SolveResult&, const SolveResult&) = default;
};

/// Accumulates evaluations and the incumbent while a solver runs.
///
/// In sparse mode a trace point is appended at the first evaluation, whenever
/// the incumbent improves, and at finish(), so every change of the
/// best-so-far energy is pinned to the evaluation that produced it. Dense
/// mode appends a point after every evaluation.
class TraceRecorder {
 public:
    enum class Mode { sparse, dense };

    explicit TraceRecorder(std::uint64_t seed, Mode mode = Mode::sparse) : mode_(mode) {
        result_.seed = seed;
    }

    /// Counts one evaluation that observed ``energy`` for ``bits``.
    void observe(double energy, const BinaryVector& bits);

    /// Counts one evaluation that did not produce a candidate (e.g. a rejected delta).
    void count();

    /// Offers a candidate without counting an evaluation.
    void offer(double energy, const BinaryVector& bits);

    std::uint64_t evals() const noexcept { return result_.evals; }
    double best_energy() const noexcept { return result_.best_energy; }

    /// Appends the closing trace point and returns the result.
    SolveResult finish() &&;

 private:
    void after_evaluation(bool improved);
    void push_point();

    Mode mode_;
    SolveResult result_;
};

/// True when the SolveResult invariants hold: nonincreasing trace, best_energy
/// equal to the final trace value, evals equal to the final trace count.
bool trace_is_consistent(const SolveResult& result);

}  // namespace sbopt
