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

#include "sbopt/scheduler.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <string>

#include "sbopt/errors.hpp"

namespace sbopt {

namespace {

bool finite_nonnegative(double v) { return std::isfinite(v) && v >= 0.0; }

void check_series(const std::vector<double>& values, std::size_t horizon, const char* what) {
    if (values.size() != horizon) {
        throw UsageError(std::string(what) + " has " + std::to_string(values.size()) +
                         " intervals but the horizon is " + std::to_string(horizon));
    }
    for (double v : values) {
        if (!finite_nonnegative(v)) throw UsageError(std::string(what) + " must be finite and >= 0");
    }
}

// Shortfall beyond round-off.
bool is_deficit(double supplied, double demand) {
    return demand - supplied > 1e-9 * (1.0 + std::abs(demand));
}

// Per-bit linear objective: (price_t + w_carbon * lambda_t) * (+kWh or -curtailed kWh).
std::vector<double> linear_costs(const SchedulingInstance& instance, double w_carbon) {
    std::vector<double> out(instance.num_bits(), 0.0);
    for (std::size_t t = 0; t < instance.horizon; ++t) {
        const double unit_cost = instance.price[t] + w_carbon * instance.carbon.values[t];
        for (std::size_t k = 0; k < instance.compressors.size(); ++k) {
            out[bit_index(UnitKind::compressor, k, t, instance)] =
                unit_cost * instance.compressors[k].energy_per_interval;
        }
        for (std::size_t d = 0; d < instance.dr_loads.size(); ++d) {
            out[bit_index(UnitKind::dr, d, t, instance)] =
                -unit_cost * instance.dr_loads[d].curtailable_kwh;
        }
    }
    return out;
}

void check_decision(const ScheduleDecision& decision, const SchedulingInstance& instance) {
    bool ok = decision.compressor_on.size() == instance.compressors.size() &&
              decision.dr_active.size() == instance.dr_loads.size();
    for (const auto& row : decision.compressor_on) ok = ok && row.size() == instance.horizon;
    for (const auto& row : decision.dr_active) ok = ok && row.size() == instance.horizon;
    if (!ok) throw UsageError("schedule decision shape does not match the instance");
}

}  // namespace

double SchedulingInstance::total_capacity() const noexcept {
    double total = 0.0;
    for (const auto& c : compressors) total += c.capacity;
    return total;
}

void SchedulingInstance::validate() const {
    if (horizon < 1) throw UsageError("scheduling horizon must be >= 1");
    if (!(interval_hours > 0.0) || !std::isfinite(interval_hours)) {
        throw UsageError("interval_hours must be > 0");
    }
    if (num_bits() == 0) throw UsageError("instance needs at least one compressor or DR load");
    for (const auto& c : compressors) {
        if (!finite_nonnegative(c.capacity) || !finite_nonnegative(c.energy_per_interval)) {
            throw UsageError("compressor '" + c.id + "' needs finite nonnegative capacity and energy");
        }
    }
    for (const auto& d : dr_loads) {
        if (!finite_nonnegative(d.curtailable_kwh)) {
            throw UsageError("DR load '" + d.id + "' needs finite nonnegative curtailable_kwh");
        }
    }
    check_series(price, horizon, "price series");
    check_series(demand, horizon, "demand series");
    check_series(carbon.values, horizon, "carbon-intensity series");
    if (carbon.interval_hours != interval_hours) {
        throw UsageError("carbon-intensity interval length differs from the instance's");
    }
    const double capacity = total_capacity();
    for (std::size_t t = 0; t < horizon; ++t) {
        if (is_deficit(capacity, demand[t])) {
            throw InfeasibleInstanceError("demand " + std::to_string(demand[t]) + " at interval " +
                                          std::to_string(t) + " exceeds total capacity " +
                                          std::to_string(capacity));
        }
    }
}

void PenaltyWeights::validate() const {
    if (!finite_nonnegative(w_carbon) || !finite_nonnegative(w_pressure) ||
        !finite_nonnegative(w_comfort)) {
        throw UsageError("penalty weights must be finite and >= 0");
    }
}

ScheduleDecision ScheduleDecision::all_off(const SchedulingInstance& instance) {
    ScheduleDecision d;
    d.compressor_on.assign(instance.compressors.size(), BinaryVector(instance.horizon, 0));
    d.dr_active.assign(instance.dr_loads.size(), BinaryVector(instance.horizon, 0));
    return d;
}

std::size_t bit_index(UnitKind kind, std::size_t unit, std::size_t t,
                      const SchedulingInstance& instance) {
    const std::size_t units =
        kind == UnitKind::compressor ? instance.compressors.size() : instance.dr_loads.size();
    if (unit >= units || t >= instance.horizon) {
        throw UsageError("bit_index: unit " + std::to_string(unit) + ", interval " +
                         std::to_string(t) + " out of range");
    }
    const std::size_t base =
        kind == UnitKind::compressor ? 0 : instance.compressors.size() * instance.horizon;
    return base + unit * instance.horizon + t;
}

QuboMatrix build_qubo(const SchedulingInstance& instance, const PenaltyWeights& weights) {
    instance.validate();
    weights.validate();
    const std::size_t n = instance.num_bits();
    const std::size_t horizon = instance.horizon;
    std::vector<double> q(n * n, 0.0);
    double offset = 0.0;

    auto add_pair = [&](std::size_t i, std::size_t j, double coeff) {
        q[i * n + j] += 0.5 * coeff;
        q[j * n + i] += 0.5 * coeff;
    };

    const std::vector<double> linear = linear_costs(instance, weights.w_carbon);
    for (std::size_t i = 0; i < n; ++i) q[i * n + i] += linear[i];

    // Pressure safety: w_p (sum_i a_i s_i - D_t)^2 over the bits active in interval t,
    // with a_i the capacity of a compressor or the relief of a DR load.
    std::vector<std::pair<std::size_t, double>> terms;
    for (std::size_t t = 0; t < horizon; ++t) {
        terms.clear();
        for (std::size_t k = 0; k < instance.compressors.size(); ++k) {
            terms.emplace_back(bit_index(UnitKind::compressor, k, t, instance),
                               instance.compressors[k].capacity);
        }
        for (std::size_t d = 0; d < instance.dr_loads.size(); ++d) {
            terms.emplace_back(bit_index(UnitKind::dr, d, t, instance),
                               instance.dr_loads[d].curtailable_kwh);
        }
        const double target = instance.demand[t];
        for (std::size_t a = 0; a < terms.size(); ++a) {
            const auto [i, wi] = terms[a];
            q[i * n + i] += weights.w_pressure * (wi * wi - 2.0 * target * wi);
            for (std::size_t b = a + 1; b < terms.size(); ++b) {
                const auto [j, wj] = terms[b];
                add_pair(i, j, 2.0 * weights.w_pressure * wi * wj);
            }
        }
        offset += weights.w_pressure * target * target;
    }

    // Comfort: w_c (sum_t s_dt - budget_d)^2.
    for (std::size_t d = 0; d < instance.dr_loads.size(); ++d) {
        const auto budget = static_cast<double>(instance.dr_loads[d].max_activations);
        for (std::size_t t = 0; t < horizon; ++t) {
            const std::size_t i = bit_index(UnitKind::dr, d, t, instance);
            q[i * n + i] += weights.w_comfort * (1.0 - 2.0 * budget);
            for (std::size_t u = t + 1; u < horizon; ++u) {
                add_pair(i, bit_index(UnitKind::dr, d, u, instance), 2.0 * weights.w_comfort);
            }
        }
        offset += weights.w_comfort * budget * budget;
    }
    return QuboMatrix::from_dense(n, q, offset);
}

ScheduleDecision decode(std::span<const std::uint8_t> bits, const SchedulingInstance& instance) {
    if (bits.size() != instance.num_bits()) {
        throw UsageError("decode: expected " + std::to_string(instance.num_bits()) +
                         " bits, got " + std::to_string(bits.size()));
    }
    ScheduleDecision out = ScheduleDecision::all_off(instance);
    for (std::size_t t = 0; t < instance.horizon; ++t) {
        for (std::size_t k = 0; k < instance.compressors.size(); ++k) {
            out.compressor_on[k][t] = bits[bit_index(UnitKind::compressor, k, t, instance)] ? 1 : 0;
        }
        for (std::size_t d = 0; d < instance.dr_loads.size(); ++d) {
            out.dr_active[d][t] = bits[bit_index(UnitKind::dr, d, t, instance)] ? 1 : 0;
        }
    }
    return out;
}

BinaryVector encode(const ScheduleDecision& decision, const SchedulingInstance& instance) {
    check_decision(decision, instance);
    BinaryVector bits(instance.num_bits(), 0);
    for (std::size_t t = 0; t < instance.horizon; ++t) {
        for (std::size_t k = 0; k < instance.compressors.size(); ++k) {
            bits[bit_index(UnitKind::compressor, k, t, instance)] = decision.compressor_on[k][t] ? 1 : 0;
        }
        for (std::size_t d = 0; d < instance.dr_loads.size(); ++d) {
            bits[bit_index(UnitKind::dr, d, t, instance)] = decision.dr_active[d][t] ? 1 : 0;
        }
    }
    return bits;
}

ScheduleMetrics evaluate(const ScheduleDecision& decision, const SchedulingInstance& instance) {
    check_decision(decision, instance);
    ScheduleMetrics m;
    const EnergySeries kwh = schedule_energy(decision, instance);
    std::vector<double> costs(instance.horizon);
    for (std::size_t t = 0; t < instance.horizon; ++t) costs[t] = instance.price[t] * kwh.values[t];
    m.energy_cost = exact_sum(costs);
    m.carbon_g = policy_carbon(decision, instance);

    for (std::size_t t = 0; t < instance.horizon; ++t) {
        double supplied = 0.0;
        for (std::size_t k = 0; k < instance.compressors.size(); ++k) {
            if (decision.compressor_on[k][t]) supplied += instance.compressors[k].capacity;
        }
        for (std::size_t d = 0; d < instance.dr_loads.size(); ++d) {
            if (decision.dr_active[d][t]) supplied += instance.dr_loads[d].curtailable_kwh;
        }
        if (is_deficit(supplied, instance.demand[t])) ++m.violations;
    }
    for (std::size_t d = 0; d < instance.dr_loads.size(); ++d) {
        const auto used = static_cast<std::size_t>(
            std::count(decision.dr_active[d].begin(), decision.dr_active[d].end(), 1));
        if (used > instance.dr_loads[d].max_activations) ++m.violations;
    }
    return m;
}

ObjectiveBreakdown direct_objective(const ScheduleDecision& decision,
                                    const SchedulingInstance& instance,
                                    const PenaltyWeights& weights) {
    check_decision(decision, instance);
    ObjectiveBreakdown out;
    for (std::size_t t = 0; t < instance.horizon; ++t) {
        double kwh = 0.0;
        double supplied = 0.0;
        for (std::size_t k = 0; k < instance.compressors.size(); ++k) {
            if (!decision.compressor_on[k][t]) continue;
            kwh += instance.compressors[k].energy_per_interval;
            supplied += instance.compressors[k].capacity;
        }
        for (std::size_t d = 0; d < instance.dr_loads.size(); ++d) {
            if (!decision.dr_active[d][t]) continue;
            kwh -= instance.dr_loads[d].curtailable_kwh;
            supplied += instance.dr_loads[d].curtailable_kwh;
        }
        out.energy_cost += instance.price[t] * kwh;
        out.carbon_g += instance.carbon.values[t] * kwh;
        const double mismatch = supplied - instance.demand[t];
        out.pressure_penalty += weights.w_pressure * mismatch * mismatch;
    }
    for (std::size_t d = 0; d < instance.dr_loads.size(); ++d) {
        const auto used = static_cast<double>(
            std::count(decision.dr_active[d].begin(), decision.dr_active[d].end(), 1));
        const double gap = used - static_cast<double>(instance.dr_loads[d].max_activations);
        out.comfort_penalty += weights.w_comfort * gap * gap;
    }
    out.total = out.energy_cost + weights.w_carbon * out.carbon_g + out.pressure_penalty +
                out.comfort_penalty;
    return out;
}

ScheduleDecision solve_greedy_schedule(const SchedulingInstance& instance) {
    instance.validate();
    ScheduleDecision out = ScheduleDecision::all_off(instance);
    std::vector<std::size_t> order(instance.compressors.size());
    for (std::size_t t = 0; t < instance.horizon; ++t) {
        std::iota(order.begin(), order.end(), std::size_t{0});
        // Cost per unit of capacity; idle-capacity units are never worth starting.
        auto unit_cost = [&](std::size_t k) {
            const auto& c = instance.compressors[k];
            return c.capacity > 0.0 ? instance.price[t] * c.energy_per_interval / c.capacity
                                    : std::numeric_limits<double>::infinity();
        };
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t a, std::size_t b) { return unit_cost(a) < unit_cost(b); });
        double supplied = 0.0;
        for (std::size_t k : order) {
            if (!is_deficit(supplied, instance.demand[t])) break;
            if (instance.compressors[k].capacity <= 0.0) continue;
            out.compressor_on[k][t] = 1;
            supplied += instance.compressors[k].capacity;
        }
        if (is_deficit(supplied, instance.demand[t])) {
            throw InfeasibleInstanceError("greedy cannot cover demand at interval " +
                                          std::to_string(t));
        }
    }
    return out;
}

double flow_granularity(const SchedulingInstance& instance) {
    constexpr double kGrid = 1e6;
    std::uint64_t g = 0;
    bool on_grid = true;
    auto absorb = [&](double v) {
        const double scaled = v * kGrid;
        const double rounded = std::round(scaled);
        if (std::abs(scaled - rounded) > 1e-6 + 1e-12 * std::abs(scaled)) on_grid = false;
        g = std::gcd(g, static_cast<std::uint64_t>(rounded));
    };
    for (const auto& c : instance.compressors) absorb(c.capacity);
    for (const auto& d : instance.dr_loads) absorb(d.curtailable_kwh);
    for (double v : instance.demand) absorb(v);
    if (!on_grid) return 1.0 / kGrid;
    if (g == 0) return 1.0;
    return static_cast<double>(g) / kGrid;
}

PenaltyWeights calibrate_penalties(const SchedulingInstance& instance, double w_carbon) {
    instance.validate();
    if (!finite_nonnegative(w_carbon)) throw UsageError("w_carbon must be finite and >= 0");
    const std::vector<double> linear = linear_costs(instance, w_carbon);
    double range = 0.0;
    for (double c : linear) range += std::abs(c);
    if (range == 0.0) range = 1.0;
    const double unit = flow_granularity(instance);
    PenaltyWeights w;
    w.w_carbon = w_carbon;
    w.w_pressure = 10.0 * range / (unit * unit);
    w.w_comfort = 10.0 * range;
    return w;
}

}  // namespace sbopt
