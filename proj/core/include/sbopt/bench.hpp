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
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "sbopt/baselines.hpp"
#include "sbopt/instance_gen.hpp"
#include "sbopt/sb_solver.hpp"
#include "sbopt/scheduler.hpp"
#include "sbopt/solve_result.hpp"

namespace sbopt {

/// Carbon price used by the demo suite and the CLI when none is given (cost per gCO2).
inline constexpr double kDefaultCarbonWeight = 5e-4;

/// First cumulative evaluation count whose best-so-far energy is within
/// ``tol`` of best_known: energy <= best_known + tol * |best_known|, or
/// energy <= tol when best_known == 0. nullopt when never reached.
std::optional<std::uint64_t> evals_to_within(std::span<const TracePoint> trace,
                                             double best_known, double tol = 0.01);

struct BenchSuite {
    std::vector<GenParams> instances;
    double w_carbon = kDefaultCarbonWeight;
    SbConfig sb;
    SaConfig sa;
    double tolerance = 0.01;
    /// best_known is the exact optimum whenever the QUBO has at most this many bits.
    std::size_t brute_force_max_bits = 20;
    /// Worker threads for instances; 0 picks hardware concurrency.
    std::size_t threads = 0;
};

struct SolverRun {
    std::string solver;  // "greedy", "sa" or "sb"
    SolveResult result;
    std::optional<std::uint64_t> evals_to_within;
    ScheduleMetrics metrics;
    std::optional<std::string> error;
};

struct InstanceReport {
    GenParams params;
    std::uint64_t seed = 0;
    std::size_t bits = 0;
    double best_known = 0.0;
    bool best_known_exact = false;
    std::vector<SolverRun> runs;

    const SolverRun* find(const std::string& solver) const;
};

struct SolverSummary {
    std::string solver;
    std::size_t instances = 0;
    std::size_t failures = 0;
    std::size_t not_reached = 0;
    /// Quartiles of evals-to-within; unreached runs count as +infinity and a
    /// quartile that lands on one is reported as nullopt.
    std::optional<double> evals_q1;
    std::optional<double> evals_median;
    std::optional<double> evals_q3;
    double median_carbon_g = 0.0;
    double total_carbon_g = 0.0;
    /// Median over instances of 100 * (greedy - this) / greedy.
    double median_reduction_vs_greedy_pct = 0.0;
    /// Same ratio computed on suite totals.
    double pooled_reduction_vs_greedy_pct = 0.0;
    std::size_t violations = 0;
};

struct BenchReport {
    double tolerance = 0.01;
    std::vector<InstanceReport> instances;  // sorted by seed
    std::vector<SolverSummary> summaries;   // greedy, sa, sb
    double ablation_median_pct = 0.0;
    double ablation_pooled_pct = 0.0;
    std::vector<std::pair<std::string, std::string>> fingerprints;

    const SolverSummary* summary(const std::string& solver) const;
};

/// Linear-interpolation quantile (p in [0, 1]); +inf entries sort last.
double quantile(std::vector<double> values, double p);
double median(std::vector<double> values);

/// 100 * (carbon_sa - carbon_sb) / carbon_sb; 0 when both are 0.
double ablation_percentage(double carbon_sa, double carbon_sb);

/// Pooled SA-vs-SB carbon ablation over the suite, in percent.
double ablation_sb_vs_sa(const BenchReport& report);

/// Runs greedy, SA and SB on every generated instance and aggregates.
/// Solver exceptions are captured per run and do not abort the suite.
BenchReport run_benchmark(const BenchSuite& suite);

/// Recomputes every summary number (and evals_to_within) from the stored
/// per-instance runs and traces.
void summarize(BenchReport& report);

std::string fingerprint(const std::string& canonical_text);

enum class ExportFormat { csv, json };

/// json: report.json. csv: summary.csv. Both also write one
/// traces/<seed>_<solver>.csv per run. Returns the files written.
std::vector<std::filesystem::path> export_report(const BenchReport& report,
                                                 const std::filesystem::path& out_dir,
                                                 ExportFormat format);

}  // namespace sbopt
