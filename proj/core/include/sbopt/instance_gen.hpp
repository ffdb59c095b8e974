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

#include "sbopt/carbon.hpp"
#include "sbopt/scheduler.hpp"

namespace sbopt {

/// Synthetic corpus parameters. Defaults follow the evaluation scale of the
/// reference setup: 50 city-gate nodes, 200 residential customers with
/// fifteen-minute records, 60 days. Generator constants are synthetic, not
/// calibrated against any measured dataset.
struct GenParams {
    std::uint64_t seed = 42;
    std::size_t days = 60;
    std::size_t nodes = 50;
    std::size_t customers = 200;
    std::size_t intervals_per_day = 96;
    std::size_t compressors = 4;
    std::size_t dr_loads = 8;
    std::size_t horizon = 24;  // hourly scheduling intervals
    std::size_t start_hour = 0;
    /// Relative amplitude of Gaussian noise on demand and intensity series.
    double noise = 0.05;
    double carbon_min = 100.0;  // gCO2 / kWh
    double carbon_max = 600.0;

    void validate() const;
};

/// Aggregate city-gate demand (flow units) over days * intervals_per_day
/// intervals: base * daily shape * weekly factor + noise, clipped at zero.
/// With noise == 0 the series is periodic with period one week.
std::vector<double> gen_demand(const GenParams& params);

/// Deterministic part of the demand profile for a given hour-of-week.
double demand_shape(double hour_in_week);

/// Diurnal intensity between carbon_min and carbon_max: a sinusoid with its
/// minimum at 13:00 plus noise, clipped to the bounds. ``count`` intervals of
/// ``interval_hours`` starting at ``start_index``.
CarbonIntensitySeries gen_carbon_intensity(const GenParams& params, std::size_t count,
                                           double interval_hours, std::int64_t start_index);

/// Intensity over the full corpus window at intervals_per_day resolution.
CarbonIntensitySeries gen_carbon_intensity(const GenParams& params);

/// Scheduling instance over ``horizon`` hourly intervals starting at
/// start_hour. Capacities, reliefs and demands are integral flow units, and
/// demand is built from a planted schedule that balances every interval
/// exactly and uses every DR load exactly max_activations times, so a
/// zero-penalty assignment always exists. Peak demand is close to
/// total capacity / 1.3.
SchedulingInstance gen_scheduling_instance(const GenParams& params);

/// One kWh series per customer, days * intervals_per_day long.
std::vector<EnergySeries> gen_consumption_panel(const GenParams& params);

}  // namespace sbopt
