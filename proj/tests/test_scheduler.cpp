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

#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <vector>

#include "sbopt/baselines.hpp"
#include "sbopt/errors.hpp"
#include "test_util.hpp"

namespace sbopt {
namespace {

using testing::random_bits;
using testing::single_compressor_instance;
using testing::small_instance;

/// Objective written out term by term from the bits, without decode().
double oracle_objective(const BinaryVector& s, const SchedulingInstance& inst,
                        const PenaltyWeights& w) {
    const std::size_t T = inst.horizon;
    const std::size_t nc = inst.compressors.size();
    double total = 0.0;
    for (std::size_t t = 0; t < T; ++t) {
        double kwh = 0.0;
        double supply = 0.0;
        for (std::size_t k = 0; k < nc; ++k) {
            if (!s[k * T + t]) continue;
            kwh += inst.compressors[k].energy_per_interval;
            supply += inst.compressors[k].capacity;
        }
        for (std::size_t d = 0; d < inst.dr_loads.size(); ++d) {
            if (!s[(nc + d) * T + t]) continue;
            kwh -= inst.dr_loads[d].curtailable_kwh;
            supply += inst.dr_loads[d].curtailable_kwh;
        }
        const double gap = supply - inst.demand[t];
        total += (inst.price[t] + w.w_carbon * inst.carbon.values[t]) * kwh + w.w_pressure * gap * gap;
    }
    for (std::size_t d = 0; d < inst.dr_loads.size(); ++d) {
        double used = 0.0;
        for (std::size_t t = 0; t < T; ++t) used += s[(nc + d) * T + t];
        const double gap = used - static_cast<double>(inst.dr_loads[d].max_activations);
        total += w.w_comfort * gap * gap;
    }
    return total;
}

TEST(BitIndex, Layout) {
    const auto inst24 = small_instance(1, 2, 3, 24);
    EXPECT_EQ(bit_index(UnitKind::compressor, 0, 0, inst24), 0U);
    EXPECT_EQ(bit_index(UnitKind::compressor, 1, 0, inst24), 24U);
    EXPECT_EQ(bit_index(UnitKind::dr, 0, 0, inst24), 48U);
    EXPECT_EQ(bit_index(UnitKind::dr, 2, 23, inst24), inst24.num_bits() - 1);
    EXPECT_THROW(bit_index(UnitKind::compressor, 2, 0, inst24), UsageError);
    EXPECT_THROW(bit_index(UnitKind::dr, 0, 24, inst24), UsageError);
}

TEST(BuildQubo, SingleCompressorHandExpansion) {
    const auto inst = single_compressor_instance();
    const QuboMatrix q = build_qubo(inst, PenaltyWeights{1e-4, 10.0, 0.0});
    ASSERT_EQ(q.size(), 1U);
    EXPECT_NEAR(q(0, 0), 15.0 - 100000.0, 1e-9);
    EXPECT_EQ(q.offset(), 100000.0);
    const auto [bits, e] = brute_force(q);
    EXPECT_EQ(bits, BinaryVector{1});
    EXPECT_NEAR(e, 15.0, 1e-9);
}

TEST(BuildQubo, ZeroDemandAndNoPenaltiesPicksAllOff) {
    auto inst = small_instance(4, 2, 1, 6);
    std::fill(inst.demand.begin(), inst.demand.end(), 0.0);
    // DR bits carry negative linear cost; drop them so every linear cost is positive.
    inst.dr_loads.clear();
    const QuboMatrix q = build_qubo(inst, PenaltyWeights{1e-3, 0.0, 0.0});
    const auto [bits, e] = brute_force(q);
    EXPECT_EQ(bits, BinaryVector(inst.num_bits(), 0));
    EXPECT_EQ(e, 0.0);
}

TEST(BuildQubo, EnergyConsistencyOnRandomAssignments) {
    SplitMix64 rng(31);
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const auto inst = small_instance(seed, 1 + seed % 4, 1 + seed % 5, 4 + seed % 9);
        const PenaltyWeights w = calibrate_penalties(inst, 5e-4);
        const QuboMatrix q = build_qubo(inst, w);
        for (int k = 0; k < 500; ++k) {
            const auto s = random_bits(inst.num_bits(), rng);
            const double expected = oracle_objective(s, inst, w);
            const double tol = 1e-6 * (1.0 + std::abs(expected));
            ASSERT_NEAR(energy(q, s), expected, tol);
            const ObjectiveBreakdown direct = direct_objective(decode(s, inst), inst, w);
            ASSERT_NEAR(direct.total, expected, tol);
            ASSERT_NEAR(direct.total, direct.energy_cost + w.w_carbon * direct.carbon_g +
                                          direct.pressure_penalty + direct.comfort_penalty,
                        tol);
        }
    }
}

TEST(BuildQubo, RejectsInfeasibleAndBadWeights) {
    auto inst = single_compressor_instance();
    inst.demand = {150.0};
    EXPECT_THROW(build_qubo(inst, PenaltyWeights{}), InfeasibleInstanceError);
    EXPECT_THROW(build_qubo(single_compressor_instance(), PenaltyWeights{-1.0, 0.0, 0.0}), UsageError);
}

TEST(Instance, ValidationErrors) {
    auto inst = small_instance(2, 2, 2, 5);
    EXPECT_NO_THROW(inst.validate());
    auto bad = inst;
    bad.price.pop_back();
    EXPECT_THROW(bad.validate(), UsageError);
    bad = inst;
    bad.demand[0] = -1.0;
    EXPECT_THROW(bad.validate(), UsageError);
    bad = inst;
    bad.carbon.interval_hours = 0.5;
    EXPECT_THROW(bad.validate(), UsageError);
    bad = inst;
    bad.horizon = 0;
    EXPECT_THROW(bad.validate(), UsageError);
}

TEST(Decode, AllZeroIsAllOff) {
    const auto inst = small_instance(3, 2, 2, 6);
    EXPECT_EQ(decode(BinaryVector(inst.num_bits(), 0), inst), ScheduleDecision::all_off(inst));
}

TEST(Decode, EncodeRoundTrip) {
    const auto inst = small_instance(3, 3, 2, 7);
    SplitMix64 rng(8);
    for (int k = 0; k < 100; ++k) {
        const auto s = random_bits(inst.num_bits(), rng);
        ASSERT_EQ(encode(decode(s, inst), inst), s);
    }
}

TEST(Decode, SingleBit) {
    const auto inst = small_instance(3, 2, 2, 6);
    BinaryVector s(inst.num_bits(), 0);
    s[bit_index(UnitKind::compressor, 1, 3, inst)] = 1;
    const ScheduleDecision d = decode(s, inst);
    for (std::size_t k = 0; k < 2; ++k) {
        for (std::size_t t = 0; t < 6; ++t) {
            EXPECT_EQ(d.compressor_on[k][t], (k == 1 && t == 3) ? 1 : 0);
            EXPECT_EQ(d.dr_active[k][t], 0);
        }
    }
}

TEST(Decode, LengthMismatch) {
    const auto inst = small_instance(3, 2, 2, 6);
    EXPECT_THROW(decode(BinaryVector(inst.num_bits() + 1, 0), inst), UsageError);
    ScheduleDecision d = ScheduleDecision::all_off(inst);
    d.dr_active.pop_back();
    EXPECT_THROW(encode(d, inst), UsageError);
    EXPECT_THROW(evaluate(d, inst), UsageError);
}

TEST(Evaluate, AllCompressorsOnIsViolationFree) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto inst = small_instance(seed, 3, 3, 8);
        ScheduleDecision d = ScheduleDecision::all_off(inst);
        for (auto& row : d.compressor_on) std::fill(row.begin(), row.end(), 1);
        EXPECT_EQ(evaluate(d, inst).violations, 0U);
    }
}

TEST(Evaluate, AllOffViolatesEveryPositiveDemandInterval) {
    const auto inst = small_instance(5, 2, 2, 10);
    std::size_t positive = 0;
    for (double v : inst.demand) positive += v > 0.0 ? 1 : 0;
    ASSERT_GT(positive, 0U);
    EXPECT_EQ(evaluate(ScheduleDecision::all_off(inst), inst).violations, positive);
}

TEST(Evaluate, OverBudgetDrCountsOnce) {
    auto inst = small_instance(5, 2, 1, 6);
    ScheduleDecision d = ScheduleDecision::all_off(inst);
    for (auto& row : d.compressor_on) std::fill(row.begin(), row.end(), 1);
    std::fill(d.dr_active[0].begin(), d.dr_active[0].end(), 1);
    ASSERT_LT(inst.dr_loads[0].max_activations, 6U);
    EXPECT_EQ(evaluate(d, inst).violations, 1U);
}

TEST(Evaluate, CostAndCarbonFromFlooredKwh) {
    SchedulingInstance inst;
    inst.horizon = 2;
    inst.compressors.push_back({"C0", 10.0, 8.0});
    inst.dr_loads.push_back({"D0", 5.0, 1});
    inst.price = {0.5, 0.25};
    inst.demand = {10.0, 5.0};
    inst.carbon = {{200.0, 100.0}, 1.0, 0};
    ScheduleDecision d = ScheduleDecision::all_off(inst);
    d.compressor_on[0] = {1, 0};
    d.dr_active[0] = {0, 1};
    const ScheduleMetrics m = evaluate(d, inst);
    EXPECT_EQ(m.energy_cost, 4.0);   // 0.5 * 8 + 0.25 * max(0, -5)
    EXPECT_EQ(m.carbon_g, 1600.0);
    EXPECT_EQ(m.violations, 0U);
}

TEST(Greedy, CheapUnitAloneWhenItCovers) {
    SchedulingInstance inst;
    inst.horizon = 1;
    inst.compressors.push_back({"expensive", 50.0, 80.0});
    inst.compressors.push_back({"cheap", 50.0, 20.0});
    inst.dr_loads.push_back({"D0", 5.0, 1});
    inst.price = {0.1};
    inst.demand = {40.0};
    inst.carbon = {{300.0}, 1.0, 0};
    const ScheduleDecision d = solve_greedy_schedule(inst);
    EXPECT_EQ(d.compressor_on[0][0], 0);
    EXPECT_EQ(d.compressor_on[1][0], 1);
    EXPECT_EQ(d.dr_active[0][0], 0);
}

TEST(Greedy, ZeroDemandIsAllOff) {
    auto inst = small_instance(6, 3, 2, 8);
    std::fill(inst.demand.begin(), inst.demand.end(), 0.0);
    EXPECT_EQ(solve_greedy_schedule(inst), ScheduleDecision::all_off(inst));
}

TEST(Greedy, CoversDemandWithoutDr) {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const auto inst = small_instance(seed, 4, 3, 12);
        const ScheduleDecision d = solve_greedy_schedule(inst);
        EXPECT_EQ(evaluate(d, inst).violations, 0U);
        for (const auto& row : d.dr_active) {
            for (auto b : row) EXPECT_EQ(b, 0);
        }
    }
}

TEST(Greedy, CarbonNotBelowBruteForceOptimum) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto inst = small_instance(500 + seed, 2, 2, 4);
        const QuboMatrix q = build_qubo(inst, calibrate_penalties(inst, 5e-4));
        const auto opt = decode(brute_force(q).first, inst);
        EXPECT_GE(policy_carbon(solve_greedy_schedule(inst), inst), policy_carbon(opt, inst))
            << "seed " << seed;
    }
}

TEST(Calibration, SingleCompressorOptimumIsFeasible) {
    const auto inst = single_compressor_instance();
    const QuboMatrix q = build_qubo(inst, calibrate_penalties(inst, 1e-4));
    const auto opt = decode(brute_force(q).first, inst);
    EXPECT_EQ(evaluate(opt, inst).violations, 0U);
}

TEST(Calibration, WeightsFollowLinearRange) {
    const auto inst = single_compressor_instance();
    const PenaltyWeights w = calibrate_penalties(inst, 1e-4);
    // Linear range 0.1 * 100 + 1e-4 * 500 * 100 = 15; flow granularity 100.
    EXPECT_EQ(flow_granularity(inst), 100.0);
    EXPECT_NEAR(w.w_pressure, 10.0 * 15.0 / 1e4, 1e-12);
    EXPECT_NEAR(w.w_comfort, 150.0, 1e-9);
    EXPECT_EQ(w.w_carbon, 1e-4);
}

TEST(Calibration, DoublingPricesDoublesPressureWeight) {
    auto inst = small_instance(7, 3, 3, 10);
    const PenaltyWeights a = calibrate_penalties(inst, 0.0);
    for (double& p : inst.price) p *= 2.0;
    const PenaltyWeights b = calibrate_penalties(inst, 0.0);
    EXPECT_NEAR(b.w_pressure, 2.0 * a.w_pressure, 1e-9 * a.w_pressure);
}

TEST(Calibration, GeneratedInstancesUseFlowQuantum) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const double g = flow_granularity(small_instance(seed, 3, 3, 8));
        EXPECT_EQ(std::fmod(g, 5.0), 0.0) << g;
    }
}

TEST(Calibration, FlowGranularityIsTheCommonDivisor) {
    auto inst = single_compressor_instance();
    inst.compressors[0].capacity = 7.5;
    inst.demand = {4.5};
    EXPECT_NEAR(flow_granularity(inst), 1.5, 1e-12);
    inst.demand = {std::sqrt(2.0)};
    EXPECT_NEAR(flow_granularity(inst), 1e-6, 1e-18);
}

TEST(Calibration, ExhaustivePenaltyDominance) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto inst = small_instance(700 + seed, 2, 2, 4);
        ASSERT_LE(inst.num_bits(), 16U);
        const PenaltyWeights w = calibrate_penalties(inst, 5e-4);
        const QuboMatrix q = build_qubo(inst, w);
        double best_zero_penalty = std::numeric_limits<double>::infinity();
        double best_violation_free = std::numeric_limits<double>::infinity();
        double best_penalized = std::numeric_limits<double>::infinity();
        double best_violating = std::numeric_limits<double>::infinity();
        for (std::uint64_t code = 0; code < (std::uint64_t{1} << inst.num_bits()); ++code) {
            const auto s = bits_from_code(code, inst.num_bits());
            const double e = energy(q, s);
            const auto d = decode(s, inst);
            const ObjectiveBreakdown parts = direct_objective(d, inst, w);
            if (parts.pressure_penalty + parts.comfort_penalty == 0.0) {
                best_zero_penalty = std::min(best_zero_penalty, e);
            } else {
                best_penalized = std::min(best_penalized, e);
            }
            if (evaluate(d, inst).violations == 0) {
                best_violation_free = std::min(best_violation_free, e);
            } else {
                best_violating = std::min(best_violating, e);
            }
        }
        ASSERT_TRUE(std::isfinite(best_zero_penalty)) << "seed " << seed;
        EXPECT_LT(best_zero_penalty, best_penalized) << "seed " << seed;
        EXPECT_LT(best_violation_free, best_violating) << "seed " << seed;
    }
}

TEST(Calibration, BruteForceOptimaAreViolationFree) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto inst = small_instance(100 + seed, 2, 2, 4);
        const QuboMatrix q = build_qubo(inst, calibrate_penalties(inst, 5e-4));
        EXPECT_EQ(evaluate(decode(brute_force(q).first, inst), inst).violations, 0U)
            << "seed " << seed;
    }
}

TEST(CarbonWeight, OptimumCarbonNonincreasingInWeight) {
    const std::vector<double> weights{0.0, 1e-4, 2e-4, 4e-4, 8e-4, 1.6e-3, 3.2e-3, 1e-2};
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto inst = small_instance(200 + seed, 2, 1, 6);
        // Penalty weights fixed across the sweep: calibrated for the largest carbon weight.
        PenaltyWeights w = calibrate_penalties(inst, weights.back());
        double previous_linear = std::numeric_limits<double>::infinity();
        double previous_policy = std::numeric_limits<double>::infinity();
        for (double wc : weights) {
            w.w_carbon = wc;
            const auto opt = decode(brute_force(build_qubo(inst, w)).first, inst);
            const double linear = direct_objective(opt, inst, w).carbon_g;
            const double policy = policy_carbon(opt, inst);
            EXPECT_LE(linear, previous_linear + 1e-6) << "seed " << seed << " w " << wc;
            EXPECT_LE(policy, previous_policy + 1e-6) << "seed " << seed << " w " << wc;
            previous_linear = linear;
            previous_policy = policy;
        }
    }
}

}  // namespace
}  // namespace sbopt
