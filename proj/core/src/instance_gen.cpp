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

#include "sbopt/instance_gen.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <string>

#include "sbopt/errors.hpp"
#include "sbopt/rng.hpp"

namespace sbopt {

namespace {

// Sub-stream tags; every generator draws from its own stream of params.seed.
constexpr std::uint64_t kDemandStream = 1;
constexpr std::uint64_t kCarbonStream = 2;
constexpr std::uint64_t kInstanceStream = 3;
constexpr std::uint64_t kPanelStream = 4;
constexpr std::uint64_t kPriceStream = 5;

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Per-node mean city-gate flow.
constexpr double kNodeBaseFlow = 100.0;
// Mean residential draw per fifteen minutes (~10 kWh / day).
constexpr double kCustomerBaseKwh = 0.1;

// Flow quantum of the scheduling instances: capacities and reliefs are
// multiples of it, so many compressor / DR combinations balance exactly.
constexpr double kFlowQuantum = 5.0;

// Hour-of-week of interval k, computed from the integer index so that series
// repeat bit-for-bit with a period of one week.
double hour_of_week(std::size_t k, std::size_t intervals_per_day) {
    const std::size_t in_week = k % (7 * intervals_per_day);
    return static_cast<double>(in_week) * kHoursPerDay / static_cast<double>(intervals_per_day);
}

double intensity_shape(double hour) {
    // -1 at 13:00 (solar trough), +1 at 01:00.
    return -std::cos(kTwoPi * (hour - 13.0) / kHoursPerDay);
}

}  // namespace

void GenParams::validate() const {
    auto positive = [](std::size_t v, const char* name) {
        if (v < 1) throw UsageError(std::string("GenParams.") + name + " must be >= 1");
    };
    positive(days, "days");
    positive(nodes, "nodes");
    positive(customers, "customers");
    positive(intervals_per_day, "intervals_per_day");
    positive(compressors, "compressors");
    positive(dr_loads, "dr_loads");
    positive(horizon, "horizon");
    if (!(noise >= 0.0) || !std::isfinite(noise)) throw UsageError("GenParams.noise must be >= 0");
    if (!(carbon_min >= 0.0 && carbon_min <= carbon_max) || !std::isfinite(carbon_max)) {
        throw UsageError("GenParams carbon bounds must satisfy 0 <= carbon_min <= carbon_max");
    }
}

double demand_shape(double hour_in_week) {
    const double day = std::floor(hour_in_week / kHoursPerDay);
    const double hour = hour_in_week - day * kHoursPerDay;
    // Morning (08:00) and evening (20:00) peaks plus a broad evening bias.
    const double daily = 1.0 + 0.25 * std::cos(kTwoPi * (hour - 8.0) / 12.0) +
                         0.10 * std::cos(kTwoPi * (hour - 18.0) / kHoursPerDay);
    const auto weekday = static_cast<long>(day) % 7;
    const double weekly = weekday >= 5 ? 0.85 : 1.0;
    return daily * weekly;
}

std::vector<double> gen_demand(const GenParams& params) {
    params.validate();
    SplitMix64 rng(derive_seed(params.seed, kDemandStream));
    const double base = kNodeBaseFlow * static_cast<double>(params.nodes);
    const std::size_t count = params.days * params.intervals_per_day;
    std::vector<double> out(count);
    for (std::size_t k = 0; k < count; ++k) {
        double value = base * demand_shape(hour_of_week(k, params.intervals_per_day));
        if (params.noise > 0.0) value += params.noise * base * rng.normal();
        out[k] = std::max(0.0, value);
    }
    return out;
}

CarbonIntensitySeries gen_carbon_intensity(const GenParams& params, std::size_t count,
                                           double interval_hours, std::int64_t start_index) {
    params.validate();
    if (!(interval_hours > 0.0)) throw UsageError("interval_hours must be > 0");
    SplitMix64 rng(derive_seed(params.seed, kCarbonStream));
    const double mid = 0.5 * (params.carbon_min + params.carbon_max);
    const double half = 0.5 * (params.carbon_max - params.carbon_min);
    CarbonIntensitySeries out;
    out.interval_hours = interval_hours;
    out.start_index = start_index;
    out.values.resize(count);
    for (std::size_t k = 0; k < count; ++k) {
        const double hour = static_cast<double>(start_index + static_cast<std::int64_t>(k)) *
                            interval_hours;
        double value = mid + half * intensity_shape(hour);
        if (params.noise > 0.0) value += params.noise * half * rng.normal();
        out.values[k] = std::clamp(value, params.carbon_min, params.carbon_max);
    }
    return out;
}

CarbonIntensitySeries gen_carbon_intensity(const GenParams& params) {
    return gen_carbon_intensity(params, params.days * params.intervals_per_day,
                                kHoursPerDay / static_cast<double>(params.intervals_per_day), 0);
}

SchedulingInstance gen_scheduling_instance(const GenParams& params) {
    params.validate();
    SplitMix64 rng(derive_seed(params.seed, kInstanceStream));
    const std::size_t horizon = params.horizon;

    SchedulingInstance inst;
    inst.horizon = horizon;
    inst.interval_hours = 1.0;

    for (std::size_t k = 0; k < params.compressors; ++k) {
        Compressor c;
        c.id = "C" + std::to_string(k);
        c.capacity = kFlowQuantum * static_cast<double>(2 + rng.below(3));  // 10, 15 or 20
        const double kwh_per_flow = rng.uniform(0.6, 1.4);
        c.energy_per_interval = std::round(c.capacity * kwh_per_flow * 10.0) / 10.0;
        inst.compressors.push_back(c);
    }
    const double capacity = inst.total_capacity();

    double relief_total = 0.0;
    for (std::size_t d = 0; d < params.dr_loads; ++d) {
        DrLoad load;
        load.id = "D" + std::to_string(d);
        load.curtailable_kwh = kFlowQuantum * static_cast<double>(1 + rng.below(2));  // 5 or 10
        load.max_activations = 1 + static_cast<std::size_t>(rng.below(std::max<std::size_t>(1, horizon / 4)));
        load.max_activations = std::min(load.max_activations, horizon);
        relief_total += load.curtailable_kwh;
        inst.dr_loads.push_back(load);
    }
    if (relief_total > capacity) {
        for (auto& load : inst.dr_loads) load.curtailable_kwh = kFlowQuantum;
    }

    // Planted schedule: each DR load active exactly max_activations times.
    std::vector<double> relief(horizon, 0.0);
    std::vector<std::size_t> slots(horizon);
    for (auto& load : inst.dr_loads) {
        for (std::size_t t = 0; t < horizon; ++t) slots[t] = t;
        rng.shuffle(std::span<std::size_t>(slots));
        std::size_t placed = 0;
        for (std::size_t t : slots) {
            if (placed == load.max_activations) break;
            if (relief[t] + load.curtailable_kwh > capacity) continue;
            relief[t] += load.curtailable_kwh;
            ++placed;
        }
        load.max_activations = placed;
    }

    // Compressor subset sums; n_comp is small in practice, larger fleets use
    // the first 16 units for planting.
    const std::size_t planted_units = std::min<std::size_t>(inst.compressors.size(), 16);
    std::vector<double> subset_capacity(std::size_t{1} << planted_units, 0.0);
    for (std::size_t mask = 1; mask < subset_capacity.size(); ++mask) {
        const auto low = static_cast<std::size_t>(std::countr_zero(mask));
        subset_capacity[mask] = subset_capacity[mask & (mask - 1)] + inst.compressors[low].capacity;
    }

    const double peak_target = capacity / 1.3;
    inst.demand.resize(horizon);
    for (std::size_t t = 0; t < horizon; ++t) {
        const double hour = static_cast<double>(params.start_hour + t);
        double target = peak_target * demand_shape(std::fmod(hour, 7.0 * kHoursPerDay)) / 1.35;
        if (params.noise > 0.0) target *= 1.0 + params.noise * rng.normal();
        double best = relief[t];
        double best_gap = std::abs(relief[t] - target);
        for (double cap : subset_capacity) {
            const double total = cap + relief[t];
            if (total > capacity) continue;
            const double gap = std::abs(total - target);
            if (gap < best_gap) {
                best_gap = gap;
                best = total;
            }
        }
        inst.demand[t] = best;
    }

    SplitMix64 price_rng(derive_seed(params.seed, kPriceStream));
    inst.price.resize(horizon);
    for (std::size_t t = 0; t < horizon; ++t) {
        const double hour = static_cast<double>(params.start_hour + t);
        double price = 0.12 + 0.06 * std::cos(kTwoPi * (hour - 18.0) / kHoursPerDay);
        if (params.noise > 0.0) price += 0.2 * params.noise * price_rng.normal() * 0.12;
        inst.price[t] = std::max(0.01, price);
    }

    inst.carbon = gen_carbon_intensity(params, horizon, 1.0,
                                       static_cast<std::int64_t>(params.start_hour));
    inst.validate();
    return inst;
}

std::vector<EnergySeries> gen_consumption_panel(const GenParams& params) {
    params.validate();
    const std::uint64_t panel_seed = derive_seed(params.seed, kPanelStream);
    const std::size_t count = params.days * params.intervals_per_day;
    const double interval_hours = kHoursPerDay / static_cast<double>(params.intervals_per_day);
    std::vector<EnergySeries> panel;
    panel.reserve(params.customers);
    for (std::size_t c = 0; c < params.customers; ++c) {
        SplitMix64 rng(derive_seed(panel_seed, c));
        const double scale = kCustomerBaseKwh * interval_hours * 4.0 * rng.uniform(0.3, 1.7);
        const double shift = rng.uniform(-1.5, 1.5);
        EnergySeries series;
        series.interval_hours = interval_hours;
        series.values.resize(count);
        for (std::size_t k = 0; k < count; ++k) {
            const double hour = std::fmod(
                hour_of_week(k, params.intervals_per_day) + shift + 7.0 * kHoursPerDay,
                7.0 * kHoursPerDay);
            double value = scale * demand_shape(hour);
            if (params.noise > 0.0) value += 4.0 * params.noise * scale * rng.normal();
            series.values[k] = std::max(0.0, value);
        }
        panel.push_back(std::move(series));
    }
    return panel;
}

}  // namespace sbopt
