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
#include <span>
#include <string>
#include <vector>

#include "sbopt/carbon.hpp"
#include "sbopt/qubo.hpp"

namespace sbopt {

struct Compressor {
    std::string id;
    double capacity = 0.0;             // flow units per interval
    double energy_per_interval = 0.0;  // kWh when running for one interval
};

/// A controllable electric load. Activating it for one interval curtails
/// curtailable_kwh and relieves the same number of flow units of compression
/// demand.
struct DrLoad {
    std::string id;
    double curtailable_kwh = 0.0;
    std::size_t max_activations = 0;
};

struct SchedulingInstance {
    std::size_t horizon = 0;
    double interval_hours = 1.0;
    std::vector<Compressor> compressors;
    std::vector<DrLoad> dr_loads;
    std::vector<double> price;   // cost / kWh
    std::vector<double> demand;  // flow units
    CarbonIntensitySeries carbon;

    /// Throws UsageError on malformed data and InfeasibleInstanceError when
    /// total capacity is below demand in some interval.
    void validate() const;
    std::size_t num_bits() const noexcept {
        return (compressors.size() + dr_loads.size()) * horizon;
    }
    double total_capacity() const noexcept;
};

struct PenaltyWeights {
    double w_carbon = 0.0;    // cost per gCO2
    double w_pressure = 0.0;  // cost per squared flow-unit mismatch
    double w_comfort = 0.0;   // cost per squared activation-count mismatch

    void validate() const;
};

/// decision[unit][t].
struct ScheduleDecision {
    std::vector<BinaryVector> compressor_on;
    std::vector<BinaryVector> dr_active;

    static ScheduleDecision all_off(const SchedulingInstance& instance);
    friend bool operator==(const ScheduleDecision&, const ScheduleDecision&) = default;
};

struct ScheduleMetrics {
    double energy_cost = 0.0;
    double carbon_g = 0.0;
    std::size_t violations = 0;
};

/// The QUBO objective evaluated directly from a decision, term by term.
struct ObjectiveBreakdown {
    double energy_cost = 0.0;  // sum_t price_t * (compressor kWh - curtailed kWh)
    double carbon_g = 0.0;     // sum_t lambda_t * (compressor kWh - curtailed kWh)
    double pressure_penalty = 0.0;
    double comfort_penalty = 0.0;
    double total = 0.0;
};

enum class UnitKind { compressor, dr };

/// Compressor bits occupy [0, n_comp * T) unit-major; DR bits follow.
std::size_t bit_index(UnitKind kind, std::size_t unit, std::size_t t,
                      const SchedulingInstance& instance);

/// Penalty QUBO. Linear terms carry energy cost and weighted carbon of the
/// net kWh; w_pressure * (supply_t + relief_t - demand_t)^2 per interval and
/// w_comfort * (activations_d - max_activations_d)^2 per DR load are expanded
/// with s^2 = s. The constants of the expansion are the matrix offset.
QuboMatrix build_qubo(const SchedulingInstance& instance, const PenaltyWeights& weights);

ScheduleDecision decode(std::span<const std::uint8_t> bits, const SchedulingInstance& instance);
BinaryVector encode(const ScheduleDecision& decision, const SchedulingInstance& instance);

/// Physical metrics: cost and carbon of the floored net kWh, and the count of
/// intervals with unmet demand plus DR loads over their activation budget.
ScheduleMetrics evaluate(const ScheduleDecision& decision, const SchedulingInstance& instance);

ObjectiveBreakdown direct_objective(const ScheduleDecision& decision,
                                    const SchedulingInstance& instance,
                                    const PenaltyWeights& weights);

/// Cost-only baseline: per interval, start compressors in ascending
/// price * energy / capacity order until demand is covered. Never uses DR.
ScheduleDecision solve_greedy_schedule(const SchedulingInstance& instance);

/// Penalty weights large enough that any assignment with a nonzero penalty
/// costs more than the full range of the linear objective:
///   w = 10 * sum_i |linear_i| / unit^2
/// with unit the flow granularity (pressure) or one activation (comfort).
PenaltyWeights calibrate_penalties(const SchedulingInstance& instance, double w_carbon);

/// Largest g such that every capacity, relief and demand is an integer
/// multiple of g, searched on a 1e-6 grid.
double flow_granularity(const SchedulingInstance& instance);

}  // namespace sbopt
