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

#include "sbopt/carbon.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "sbopt/errors.hpp"
#include "sbopt/scheduler.hpp"

namespace sbopt {

template <typename Tag>
void validate_series(const IntervalSeries<Tag>& series, const char* what) {
    if (!(series.interval_hours > 0.0) || !std::isfinite(series.interval_hours)) {
        throw UsageError(std::string(what) + ": interval_hours must be > 0");
    }
    for (std::size_t k = 0; k < series.values.size(); ++k) {
        const double v = series.values[k];
        if (!std::isfinite(v) || v < 0.0) {
            throw UsageError(std::string(what) + ": value at interval " + std::to_string(k) +
                             " must be finite and >= 0");
        }
    }
}

template void validate_series(const CarbonIntensitySeries&, const char*);
template void validate_series(const EnergySeries&, const char*);
template void validate_series(const EmissionSeries&, const char*);

EmissionSeries attribute(const EnergySeries& energy, const CarbonIntensitySeries& intensity) {
    validate_series(energy, "energy series");
    validate_series(intensity, "carbon-intensity series");
    if (!energy.same_axis(intensity)) {
        throw UsageError("energy series (" + std::to_string(energy.size()) +
                         " intervals) and carbon-intensity series (" +
                         std::to_string(intensity.size()) +
                         " intervals) do not share a time axis");
    }
    EmissionSeries out;
    out.interval_hours = energy.interval_hours;
    out.start_index = energy.start_index;
    out.values.resize(energy.size());
    for (std::size_t k = 0; k < energy.size(); ++k) {
        out.values[k] = energy.values[k] * intensity.values[k];
    }
    return out;
}

double exact_sum(std::span<const double> values) {
    // Shewchuk's non-overlapping partials with a correctly rounded final
    // collapse (the same algorithm as Python's math.fsum).
    std::vector<double> partials;
    for (double x : values) {
        std::size_t i = 0;
        for (double y : partials) {
            if (std::abs(x) < std::abs(y)) std::swap(x, y);
            const double hi = x + y;
            const double lo = y - (hi - x);
            if (lo != 0.0) partials[i++] = lo;
            x = hi;
        }
        partials.resize(i);
        partials.push_back(x);
    }
    std::size_t n = partials.size();
    if (n == 0) return 0.0;
    double hi = partials[--n];
    double lo = 0.0;
    while (n > 0) {
        const double x = hi;
        const double y = partials[--n];
        hi = x + y;
        const double yr = hi - x;
        lo = y - yr;
        if (lo != 0.0) break;
    }
    if (n > 0 && ((lo < 0.0 && partials[n - 1] < 0.0) || (lo > 0.0 && partials[n - 1] > 0.0))) {
        const double y = lo * 2.0;
        const double x = hi + y;
        const double yr = x - hi;
        if (y == yr) hi = x;
    }
    return hi;
}

std::vector<BucketTotal> aggregate(const EmissionSeries& emissions, Bucket bucket) {
    validate_series(emissions, "emission series");
    const std::size_t n = emissions.size();
    const double span_hours = static_cast<double>(n) * emissions.interval_hours;
    const double bucket_hours = bucket == Bucket::daily     ? kHoursPerDay
                                : bucket == Bucket::monthly ? kHoursPerDay * kDaysPerMonth
                                                            : 0.0;
    if (bucket == Bucket::total || span_hours < bucket_hours) {
        return {{"total", exact_sum(emissions.values)}};
    }

    const char* prefix = bucket == Bucket::daily ? "day " : "month ";
    std::vector<BucketTotal> out;
    std::vector<double> terms;
    std::int64_t current = 0;
    auto flush = [&] {
        if (!terms.empty()) out.push_back({prefix + std::to_string(current), exact_sum(terms)});
        terms.clear();
    };
    for (std::size_t k = 0; k < n; ++k) {
        const double start_hour =
            static_cast<double>(emissions.start_index + static_cast<std::int64_t>(k)) *
            emissions.interval_hours;
        // Small slack so interval starts computed in floating point land in
        // the bucket they nominally begin.
        const auto index = static_cast<std::int64_t>(std::floor(start_hour / bucket_hours + 1e-9));
        if (!terms.empty() && index != current) flush();
        current = index;
        terms.push_back(emissions.values[k]);
    }
    flush();
    return out;
}

Bucket parse_bucket(const std::string& name) {
    if (name == "daily") return Bucket::daily;
    if (name == "monthly") return Bucket::monthly;
    if (name == "total") return Bucket::total;
    throw UsageError("unknown bucket '" + name + "' (expected daily, monthly or total)");
}

std::string to_string(Bucket bucket) {
    switch (bucket) {
        case Bucket::daily:
            return "daily";
        case Bucket::monthly:
            return "monthly";
        case Bucket::total:
            return "total";
    }
    return "total";
}

EnergySeries schedule_energy(const ScheduleDecision& decision, const SchedulingInstance& instance) {
    const std::size_t horizon = instance.horizon;
    if (decision.compressor_on.size() != instance.compressors.size() ||
        decision.dr_active.size() != instance.dr_loads.size()) {
        throw UsageError("schedule decision does not match the instance's units");
    }
    EnergySeries out;
    out.interval_hours = instance.carbon.interval_hours;
    out.start_index = instance.carbon.start_index;
    out.values.assign(horizon, 0.0);
    for (std::size_t t = 0; t < horizon; ++t) {
        double kwh = 0.0;
        for (std::size_t k = 0; k < instance.compressors.size(); ++k) {
            if (decision.compressor_on[k].at(t)) kwh += instance.compressors[k].energy_per_interval;
        }
        for (std::size_t d = 0; d < instance.dr_loads.size(); ++d) {
            if (decision.dr_active[d].at(t)) kwh -= instance.dr_loads[d].curtailable_kwh;
        }
        out.values[t] = std::max(0.0, kwh);
    }
    return out;
}

double policy_carbon(const ScheduleDecision& decision, const SchedulingInstance& instance) {
    const EmissionSeries emissions = attribute(schedule_energy(decision, instance), instance.carbon);
    return aggregate(emissions, Bucket::total).front().grams;
}

}  // namespace sbopt
