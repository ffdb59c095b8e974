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

#include "sbopt/solve_result.hpp"

#include <cmath>

namespace sbopt {

void TraceRecorder::observe(double energy, const BinaryVector& bits) {
    ++result_.evals;
    const bool improved = energy < result_.best_energy;
    if (improved) {
        result_.best_energy = energy;
        result_.best_bits = bits;
    }
    after_evaluation(improved);
}

void TraceRecorder::count() {
    ++result_.evals;
    after_evaluation(false);
}

void TraceRecorder::offer(double energy, const BinaryVector& bits) {
    if (energy < result_.best_energy) {
        result_.best_energy = energy;
        result_.best_bits = bits;
        push_point();
    }
}

void TraceRecorder::after_evaluation(bool improved) {
    if (!std::isfinite(result_.best_energy)) return;
    if (improved || mode_ == Mode::dense || result_.trace.empty()) push_point();
}

void TraceRecorder::push_point() {
    if (result_.evals == 0) return;
    if (!result_.trace.empty() && result_.trace.back().evals == result_.evals) {
        result_.trace.back().best_energy = result_.best_energy;
    } else {
        result_.trace.push_back({result_.evals, result_.best_energy});
    }
}

SolveResult TraceRecorder::finish() && {
    push_point();
    return std::move(result_);
}

bool trace_is_consistent(const SolveResult& result) {
    if (result.trace.empty()) return result.evals == 0;
    for (std::size_t k = 1; k < result.trace.size(); ++k) {
        if (result.trace[k].best_energy > result.trace[k - 1].best_energy) return false;
        if (result.trace[k].evals <= result.trace[k - 1].evals) return false;
    }
    return result.trace.back().best_energy == result.best_energy &&
           result.trace.back().evals == result.evals;
}

}  // namespace sbopt
