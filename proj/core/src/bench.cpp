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

#include "sbopt/bench.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <limits>
#include <thread>

#include "sbopt/errors.hpp"
#include "sbopt/io.hpp"
#include "sbopt/rng.hpp"

namespace sbopt {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

const char* const kSolvers[] = {"greedy", "sa", "sb"};

SolverRun run_solver(const std::string& name, const SchedulingInstance& inst, const QuboMatrix& q,
                     const BenchSuite& suite, std::uint64_t instance_seed) {
    SolverRun run;
    run.solver = name;
    try {
        if (name == "greedy") {
            const ScheduleDecision decision = solve_greedy_schedule(inst);
            BinaryVector bits = encode(decision, inst);
            TraceRecorder recorder(instance_seed);
            recorder.observe(energy(q, bits), bits);
            run.result = std::move(recorder).finish();
        } else if (name == "sa") {
            SaConfig cfg = suite.sa;
            cfg.seed = derive_seed(suite.sa.seed, instance_seed);
            run.result = solve_sa(q, cfg);
        } else {
            SbConfig cfg = suite.sb;
            cfg.seed = derive_seed(suite.sb.seed, instance_seed);
            run.result = solve_sb(q, cfg);
        }
        run.metrics = evaluate(decode(run.result.best_bits, inst), inst);
    } catch (const std::exception& e) {
        run.error = e.what();
    }
    return run;
}

InstanceReport run_instance(const GenParams& params, const BenchSuite& suite) {
    InstanceReport report;
    report.params = params;
    report.seed = params.seed;
    const SchedulingInstance inst = gen_scheduling_instance(params);
    const PenaltyWeights weights = calibrate_penalties(inst, suite.w_carbon);
    const QuboMatrix q = build_qubo(inst, weights);
    report.bits = q.size();

    for (const char* name : kSolvers) report.runs.push_back(run_solver(name, inst, q, suite, params.seed));

    report.best_known = kInf;
    for (const auto& run : report.runs) {
        if (!run.error) report.best_known = std::min(report.best_known, run.result.best_energy);
    }
    if (q.size() <= std::min(suite.brute_force_max_bits, kBruteForceMaxBits)) {
        report.best_known = brute_force(q).second;
        report.best_known_exact = true;
    }
    return report;
}

double reduction_pct(double baseline, double value) {
    if (baseline == 0.0) return 0.0;
    return 100.0 * (baseline - value) / baseline;
}

std::optional<double> finite_or_null(double v) {
    if (std::isfinite(v)) return v;
    return std::nullopt;
}

}  // namespace

std::optional<std::uint64_t> evals_to_within(std::span<const TracePoint> trace, double best_known,
                                             double tol) {
    const double threshold =
        best_known == 0.0 ? tol : best_known + tol * std::abs(best_known);
    for (const auto& point : trace) {
        if (point.best_energy <= threshold) return point.evals;
    }
    return std::nullopt;
}

const SolverRun* InstanceReport::find(const std::string& solver) const {
    for (const auto& run : runs) {
        if (run.solver == solver) return &run;
    }
    return nullptr;
}

const SolverSummary* BenchReport::summary(const std::string& solver) const {
    for (const auto& s : summaries) {
        if (s.solver == solver) return &s;
    }
    return nullptr;
}

double quantile(std::vector<double> values, double p) {
    if (values.empty()) return std::numeric_limits<double>::quiet_NaN();
    std::sort(values.begin(), values.end());
    const double pos = p * static_cast<double>(values.size() - 1);
    const auto lo = static_cast<std::size_t>(std::floor(pos));
    const auto hi = static_cast<std::size_t>(std::ceil(pos));
    if (lo == hi || values[lo] == values[hi]) return values[lo];
    if (!std::isfinite(values[hi])) return kInf;
    const double frac = pos - static_cast<double>(lo);
    return values[lo] + frac * (values[hi] - values[lo]);
}

double median(std::vector<double> values) { return quantile(std::move(values), 0.5); }

double ablation_percentage(double carbon_sa, double carbon_sb) {
    if (carbon_sb == 0.0) return carbon_sa == 0.0 ? 0.0 : kInf;
    return 100.0 * (carbon_sa - carbon_sb) / carbon_sb;
}

double ablation_sb_vs_sa(const BenchReport& report) {
    double sa = 0.0;
    double sb = 0.0;
    for (const auto& inst : report.instances) {
        const SolverRun* a = inst.find("sa");
        const SolverRun* b = inst.find("sb");
        if (!a || !b || a->error || b->error) continue;
        sa += a->metrics.carbon_g;
        sb += b->metrics.carbon_g;
    }
    return ablation_percentage(sa, sb);
}

void summarize(BenchReport& report) {
    std::sort(report.instances.begin(), report.instances.end(),
              [](const InstanceReport& a, const InstanceReport& b) { return a.seed < b.seed; });
    for (auto& inst : report.instances) {
        for (auto& run : inst.runs) {
            run.evals_to_within = run.error ? std::nullopt
                                            : evals_to_within(run.result.trace, inst.best_known,
                                                              report.tolerance);
        }
    }

    report.summaries.clear();
    for (const char* name : kSolvers) {
        SolverSummary s;
        s.solver = name;
        std::vector<double> evals;
        std::vector<double> carbon;
        std::vector<double> reductions;
        double greedy_total = 0.0;
        for (const auto& inst : report.instances) {
            const SolverRun* run = inst.find(name);
            if (!run) continue;
            ++s.instances;
            if (run->error) {
                ++s.failures;
                continue;
            }
            if (run->evals_to_within) {
                evals.push_back(static_cast<double>(*run->evals_to_within));
            } else {
                ++s.not_reached;
                evals.push_back(kInf);
            }
            carbon.push_back(run->metrics.carbon_g);
            s.total_carbon_g += run->metrics.carbon_g;
            s.violations += run->metrics.violations;
            const SolverRun* greedy = inst.find("greedy");
            if (greedy && !greedy->error) {
                reductions.push_back(reduction_pct(greedy->metrics.carbon_g, run->metrics.carbon_g));
                greedy_total += greedy->metrics.carbon_g;
            }
        }
        if (!evals.empty()) {
            s.evals_q1 = finite_or_null(quantile(evals, 0.25));
            s.evals_median = finite_or_null(quantile(evals, 0.5));
            s.evals_q3 = finite_or_null(quantile(evals, 0.75));
        }
        if (!carbon.empty()) s.median_carbon_g = median(carbon);
        if (!reductions.empty()) s.median_reduction_vs_greedy_pct = median(reductions);
        s.pooled_reduction_vs_greedy_pct = reduction_pct(greedy_total, s.total_carbon_g);
        report.summaries.push_back(std::move(s));
    }

    std::vector<double> ablations;
    for (const auto& inst : report.instances) {
        const SolverRun* a = inst.find("sa");
        const SolverRun* b = inst.find("sb");
        if (!a || !b || a->error || b->error) continue;
        ablations.push_back(ablation_percentage(a->metrics.carbon_g, b->metrics.carbon_g));
    }
    report.ablation_median_pct = ablations.empty() ? 0.0 : median(ablations);
    report.ablation_pooled_pct = ablation_sb_vs_sa(report);
}

BenchReport run_benchmark(const BenchSuite& suite) {
    suite.sb.validate();
    suite.sa.validate();
    if (!(suite.tolerance >= 0.0)) throw UsageError("suite tolerance must be >= 0");
    for (const auto& p : suite.instances) p.validate();

    BenchReport report;
    report.tolerance = suite.tolerance;
    report.instances.resize(suite.instances.size());
    std::vector<std::string> failures(suite.instances.size());

    std::size_t workers = suite.threads ? suite.threads : std::thread::hardware_concurrency();
    workers = std::clamp<std::size_t>(workers, 1, std::max<std::size_t>(1, suite.instances.size()));
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t k = next++; k < suite.instances.size(); k = next++) {
            try {
                report.instances[k] = run_instance(suite.instances[k], suite);
            } catch (const std::exception& e) {
                failures[k] = e.what();
            }
        }
    };
    if (workers == 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work);
    }
    for (std::size_t k = 0; k < failures.size(); ++k) {
        if (!failures[k].empty()) {
            throw UsageError("instance seed " + std::to_string(suite.instances[k].seed) + ": " +
                             failures[k]);
        }
    }

    // The fingerprint ignores the worker count.
    BenchSuite canonical = suite;
    canonical.threads = 0;
    report.fingerprints = {{"sa", fingerprint(io::sa_config_to_json(suite.sa))},
                           {"sb", fingerprint(io::sb_config_to_json(suite.sb))},
                           {"suite", fingerprint(io::suite_to_json(canonical))}};
    summarize(report);
    return report;
}

std::string fingerprint(const std::string& canonical_text) {
    // FNV-1a, 64-bit.
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : canonical_text) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::vector<std::filesystem::path> export_report(const BenchReport& report,
                                                 const std::filesystem::path& out_dir,
                                                 ExportFormat format) {
    std::vector<std::filesystem::path> written;
    const auto traces = out_dir / "traces";
    std::filesystem::create_directories(traces);
    for (const auto& inst : report.instances) {
        for (const auto& run : inst.runs) {
            const auto path = traces / (std::to_string(inst.seed) + "_" + run.solver + ".csv");
            io::write_text(path, io::trace_to_csv(run.result.trace));
            written.push_back(path);
        }
    }
    if (format == ExportFormat::json) {
        const auto path = out_dir / "report.json";
        io::write_text(path, io::report_to_json(report));
        written.push_back(path);
    } else {
        std::string csv =
            "solver,instances,failures,not_reached,evals_q1,evals_median,evals_q3,"
            "median_carbon_g,total_carbon_g,median_reduction_vs_greedy_pct,"
            "pooled_reduction_vs_greedy_pct,violations\n";
        auto opt = [](const std::optional<double>& v) { return v ? io::format_double(*v) : std::string(); };
        for (const auto& s : report.summaries) {
            csv += s.solver + "," + std::to_string(s.instances) + "," + std::to_string(s.failures) +
                   "," + std::to_string(s.not_reached) + "," + opt(s.evals_q1) + "," +
                   opt(s.evals_median) + "," + opt(s.evals_q3) + "," +
                   io::format_double(s.median_carbon_g) + "," + io::format_double(s.total_carbon_g) +
                   "," + io::format_double(s.median_reduction_vs_greedy_pct) + "," +
                   io::format_double(s.pooled_reduction_vs_greedy_pct) + "," +
                   std::to_string(s.violations) + "\n";
        }
        const auto path = out_dir / "summary.csv";
        io::write_text(path, csv);
        written.push_back(path);
    }
    return written;
}

}  // namespace sbopt
