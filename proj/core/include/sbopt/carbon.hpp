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
#include <string>
#include <vector>

namespace sbopt {

/// Per-interval series on a regular time axis. Interval k of the series
/// covers hours [(start_index + k) * interval_hours, (start_index + k + 1) * interval_hours).
/// The tag keeps intensities, energies and emissions from being mixed up.
template <typename Tag>
struct IntervalSeries {
    std::vector<double> values;
    double interval_hours = 1.0;
    std::int64_t start_index = 0;

    std::size_t size() const noexcept { return values.size(); }
    bool same_axis(const auto& other) const noexcept {
        return values.size() == other.values.size() && interval_hours == other.interval_hours &&
               start_index == other.start_index;
    }
};

struct CarbonIntensityTag {};  // gCO2 / kWh
struct EnergyTag {};           // kWh
struct EmissionTag {};         // gCO2

using CarbonIntensitySeries = IntervalSeries<CarbonIntensityTag>;
using EnergySeries = IntervalSeries<EnergyTag>;
using EmissionSeries = IntervalSeries<EmissionTag>;

/// Throws UsageError unless every value is finite and >= 0 and interval_hours > 0.
template <typename Tag>
void validate_series(const IntervalSeries<Tag>& series, const char* what);

/// Elementwise E_t * lambda_t. Axes must match exactly.
EmissionSeries attribute(const EnergySeries& energy, const CarbonIntensitySeries& intensity);

enum class Bucket { daily, monthly, total };

struct BucketTotal {
    std::string label;
    double grams = 0.0;

    friend bool operator==(const BucketTotal&, const BucketTotal&) = default;
};

inline constexpr double kHoursPerDay = 24.0;
/// Calendar-free month: month m covers days [30 m, 30 m + 30).
inline constexpr std::int64_t kDaysPerMonth = 30;

/// Sums emissions into day or month buckets ("day 3", "month 0") or a single
/// "total". A series spanning less than one bucket collapses to a single
/// "total" entry, as does an empty series. Each bucket sum is the correctly
/// rounded value of the exact sum of its terms.
std::vector<BucketTotal> aggregate(const EmissionSeries& emissions, Bucket bucket);

Bucket parse_bucket(const std::string& name);
std::string to_string(Bucket bucket);

/// Correctly rounded sum (Shewchuk partials), independent of term order.
double exact_sum(std::span<const double> values);

struct ScheduleDecision;
struct SchedulingInstance;

/// Net kWh drawn by a schedule in every interval: compressor energy of
/// running units minus curtailed kWh of active DR loads, floored at zero.
EnergySeries schedule_energy(const ScheduleDecision& decision, const SchedulingInstance& instance);

/// Total gCO2 of a schedule: aggregate(attribute(schedule_energy, carbon), total).
double policy_carbon(const ScheduleDecision& decision, const SchedulingInstance& instance);

}  // namespace sbopt
