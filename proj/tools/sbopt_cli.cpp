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

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "sbopt/baselines.hpp"
#include "sbopt/bench.hpp"
#include "sbopt/carbon.hpp"
#include "sbopt/errors.hpp"
#include "sbopt/instance_gen.hpp"
#include "sbopt/io.hpp"
#include "sbopt/sb_solver.hpp"
#include "sbopt/scheduler.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr std::uint64_t kDefaultSeed = 42;

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitUsage = 2;

struct Globals {
    std::uint64_t seed = kDefaultSeed;
    std::string out_dir = ".";
    std::string format = "json";
};

struct GenOptions {
    sbopt::GenParams params;
};

struct SolveOptions {
    std::string input;
    std::string solver = "sb";
    sbopt::SbConfig sb;
    sbopt::SaConfig sa;
    std::optional<std::size_t> restarts;
    std::optional<double> initial_temperature;
    double w_carbon = sbopt::kDefaultCarbonWeight;
    std::optional<double> w_pressure;
    std::optional<double> w_comfort;
};

struct BenchOptions {
    std::string suite;
    std::optional<std::size_t> threads;
};

struct CarbonOptions {
    std::string energy;
    std::string intensity;
    std::string bucket = "total";
    double interval_hours = 0.25;
};

struct ReportOptions {
    std::string report;
};

template <typename F>
auto parse_file(const std::string& path, F&& parse) {
    const std::string text = sbopt::io::read_text(path);
    try {
        return parse(text);
    } catch (const sbopt::UsageError& e) {
        throw sbopt::UsageError(path + ": " + e.what());
    }
}

void print_json(const json& j) { std::cout << j.dump() << '\n'; }

std::string series_csv(const std::vector<double>& values) {
    std::string out = "interval,value\n";
    for (std::size_t k = 0; k < values.size(); ++k) {
        out += std::to_string(k) + "," + sbopt::io::format_double(values[k]) + "\n";
    }
    return out;
}

int run_gen(const Globals& g, GenOptions opts) {
    opts.params.seed = g.seed;
    opts.params.validate();
    const fs::path out = g.out_dir;
    const sbopt::SchedulingInstance inst = sbopt::gen_scheduling_instance(opts.params);

    std::vector<fs::path> files;
    auto write = [&](const fs::path& path, const std::string& text) {
        sbopt::io::write_text(path, text);
        files.push_back(path);
    };
    write(out / "instance.json", sbopt::io::instance_to_json(inst));
    write(out / "demand.csv", series_csv(sbopt::gen_demand(opts.params)));
    write(out / "carbon_intensity.csv",
          sbopt::io::series_to_csv(sbopt::gen_carbon_intensity(opts.params)));
    const auto panel = sbopt::gen_consumption_panel(opts.params);
    for (std::size_t c = 0; c < panel.size(); ++c) {
        char name[32];
        std::snprintf(name, sizeof name, "customer_%03zu.csv", c);
        write(out / "panel" / name, sbopt::io::series_to_csv(panel[c]));
    }

    json paths = json::array();
    for (const auto& f : files) paths.push_back(f.string());
    print_json({{"files", paths}});
    return kExitOk;
}

int run_solve(const Globals& g, SolveOptions opts) {
    const bool is_instance = parse_file(opts.input, sbopt::io::is_instance_document);

    std::optional<sbopt::SchedulingInstance> inst;
    std::optional<sbopt::QuboMatrix> q;
    if (is_instance) {
        inst = parse_file(opts.input, sbopt::io::instance_from_json);
        sbopt::PenaltyWeights w = sbopt::calibrate_penalties(*inst, opts.w_carbon);
        if (opts.w_pressure) w.w_pressure = *opts.w_pressure;
        if (opts.w_comfort) w.w_comfort = *opts.w_comfort;
        w.validate();
        q = sbopt::build_qubo(*inst, w);
    } else {
        q = parse_file(opts.input, sbopt::io::qubo_from_json);
    }

    sbopt::SolveResult result;
    if (opts.solver == "sb") {
        opts.sb.seed = g.seed;
        if (opts.restarts) opts.sb.restarts = *opts.restarts;
        result = sbopt::solve_sb(*q, opts.sb);
    } else if (opts.solver == "sa") {
        opts.sa.seed = g.seed;
        if (opts.restarts) opts.sa.restarts = *opts.restarts;
        if (opts.initial_temperature) opts.sa.initial_temperature = opts.initial_temperature;
        result = sbopt::solve_sa(*q, opts.sa);
    } else if (opts.solver == "brute") {
        auto [bits, e] = sbopt::brute_force(*q);
        sbopt::TraceRecorder recorder(g.seed);
        recorder.offer(e, bits);
        result = std::move(recorder).finish();
        result.evals = std::uint64_t{1} << q->size();
        result.trace = {{result.evals, e}};
    } else {
        if (!inst) throw sbopt::UsageError("--solver greedy needs a scheduling instance, not a QUBO");
        const sbopt::BinaryVector bits = sbopt::encode(sbopt::solve_greedy_schedule(*inst), *inst);
        sbopt::TraceRecorder recorder(g.seed);
        recorder.observe(sbopt::energy(*q, bits), bits);
        result = std::move(recorder).finish();
    }

    sbopt::io::write_text(fs::path(g.out_dir) / "trace.csv", sbopt::io::trace_to_csv(result.trace));
    if (inst) {
        const sbopt::ScheduleMetrics m = sbopt::evaluate(sbopt::decode(result.best_bits, *inst), *inst);
        std::cout << sbopt::io::solve_result_to_json(result, opts.solver, &m) << '\n';
    } else {
        std::cout << sbopt::io::solve_result_to_json(result, opts.solver) << '\n';
    }
    return kExitOk;
}

sbopt::ExportFormat parse_format(const std::string& name) {
    if (name == "json") return sbopt::ExportFormat::json;
    if (name == "csv") return sbopt::ExportFormat::csv;
    throw sbopt::UsageError("unknown format '" + name + "' (expected json or csv)");
}

int run_bench(const Globals& g, const BenchOptions& opts) {
    const sbopt::ExportFormat format = parse_format(g.format);
    sbopt::BenchSuite suite = parse_file(opts.suite, sbopt::io::suite_from_json);
    if (opts.threads) suite.threads = *opts.threads;
    const sbopt::BenchReport report = sbopt::run_benchmark(suite);
    const auto files = sbopt::export_report(report, g.out_dir, format);

    json summaries = json::array();
    for (const auto& s : report.summaries) {
        auto opt = [](const std::optional<double>& v) { return v ? json(*v) : json(nullptr); };
        summaries.push_back({{"solver", s.solver},
                             {"evals_median", opt(s.evals_median)},
                             {"median_carbon_g", s.median_carbon_g},
                             {"median_reduction_vs_greedy_pct", s.median_reduction_vs_greedy_pct},
                             {"violations", s.violations}});
    }
    json paths = json::array();
    for (const auto& f : files) paths.push_back(f.string());
    print_json({{"files", paths},
                {"summaries", summaries},
                {"ablation_sb_vs_sa_median_pct", report.ablation_median_pct}});
    return kExitOk;
}

int run_carbon(const Globals& g, const CarbonOptions& opts) {
    const sbopt::Bucket bucket = sbopt::parse_bucket(opts.bucket);
    const auto energy = parse_file(opts.energy, [&](const std::string& text) {
        return sbopt::io::series_from_csv<sbopt::EnergyTag>(text, opts.interval_hours);
    });
    if (energy.size() == 0) throw sbopt::UsageError(opts.energy + ": energy series has no rows");
    const auto intensity = parse_file(opts.intensity, [&](const std::string& text) {
        return sbopt::io::series_from_csv<sbopt::CarbonIntensityTag>(text, opts.interval_hours);
    });
    const sbopt::EmissionSeries emissions = sbopt::attribute(energy, intensity);
    const auto buckets = sbopt::aggregate(emissions, bucket);
    const double total = sbopt::exact_sum(emissions.values);

    const fs::path out = g.out_dir;
    sbopt::io::write_text(out / "emissions.csv", sbopt::io::series_to_csv(emissions));
    json rows = json::array();
    for (const auto& b : buckets) rows.push_back({{"label", b.label}, {"grams", b.grams}});
    const json summary = {{"format_version", sbopt::io::kFormatVersion},
                          {"bucket", sbopt::to_string(bucket)},
                          {"buckets", rows},
                          {"total_g", total}};
    sbopt::io::write_text(out / "summary.json", summary.dump(2) + "\n");
    print_json({{"total_g", total}});
    return kExitOk;
}

int run_report(const ReportOptions& opts) {
    fs::path path = opts.report;
    if (fs::is_directory(path)) path /= "report.json";
    const sbopt::BenchReport stored = parse_file(path.string(), sbopt::io::report_from_json);
    const fs::path traces = path.parent_path() / "traces";

    sbopt::BenchReport recomputed = stored;
    std::vector<std::string> problems;
    for (auto& inst : recomputed.instances) {
        const sbopt::SchedulingInstance instance = sbopt::gen_scheduling_instance(inst.params);
        for (auto& run : inst.runs) {
            const fs::path trace_path =
                traces / (std::to_string(inst.seed) + "_" + run.solver + ".csv");
            run.result.trace = parse_file(trace_path.string(), sbopt::io::trace_from_csv);
            if (run.error) continue;
            const sbopt::ScheduleMetrics m =
                sbopt::evaluate(sbopt::decode(run.result.best_bits, instance), instance);
            if (!sbopt::nearly_equal(m.carbon_g, run.metrics.carbon_g) ||
                !sbopt::nearly_equal(m.energy_cost, run.metrics.energy_cost) ||
                m.violations != run.metrics.violations) {
                problems.push_back("metrics of " + run.solver + " on seed " +
                                   std::to_string(inst.seed) + " do not match its best_bits");
            }
            if (!sbopt::trace_is_consistent(run.result)) {
                problems.push_back("trace of " + run.solver + " on seed " +
                                   std::to_string(inst.seed) + " is inconsistent");
            }
        }
    }
    sbopt::summarize(recomputed);

    if (sbopt::io::report_to_json(recomputed) != sbopt::io::report_to_json(stored)) {
        problems.push_back("summary numbers differ from recomputation over the stored traces");
    }
    json list = json::array();
    for (const auto& p : problems) {
        list.push_back(p);
        std::cerr << "sbopt report: " << p << '\n';
    }
    print_json({{"consistent", problems.empty()}, {"problems", list}});
    return problems.empty() ? kExitOk : kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"sbopt: QUBO scheduling with Simulated Bifurcation, baselines and carbon accounting"};
    app.require_subcommand(1);
    app.fallthrough();

    Globals g;
    app.add_option("--seed", g.seed, "Seed for every random choice")->capture_default_str();
    app.add_option("--out-dir", g.out_dir, "Directory for written files")->capture_default_str();
    app.add_option("--format", g.format, "Export format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();

    GenOptions gen;
    auto* gen_cmd = app.add_subcommand("gen", "Generate a scheduling instance and synthetic series");
    gen_cmd->add_option("--days", gen.params.days)->capture_default_str();
    gen_cmd->add_option("--nodes", gen.params.nodes)->capture_default_str();
    gen_cmd->add_option("--customers", gen.params.customers)->capture_default_str();
    gen_cmd->add_option("--intervals-per-day", gen.params.intervals_per_day)->capture_default_str();
    gen_cmd->add_option("--compressors", gen.params.compressors)->capture_default_str();
    gen_cmd->add_option("--dr-loads", gen.params.dr_loads)->capture_default_str();
    gen_cmd->add_option("--horizon", gen.params.horizon)->capture_default_str();
    gen_cmd->add_option("--start-hour", gen.params.start_hour)->capture_default_str();
    gen_cmd->add_option("--noise", gen.params.noise)->capture_default_str();
    gen_cmd->add_option("--carbon-min", gen.params.carbon_min)->capture_default_str();
    gen_cmd->add_option("--carbon-max", gen.params.carbon_max)->capture_default_str();

    SolveOptions solve;
    auto* solve_cmd = app.add_subcommand("solve", "Solve a QUBO or scheduling-instance JSON file");
    solve_cmd->add_option("input", solve.input, "QUBO or instance JSON")->required();
    solve_cmd->add_option("--solver", solve.solver)
        ->check(CLI::IsMember({"sb", "sa", "greedy", "brute"}))
        ->capture_default_str();
    solve_cmd->add_option("--restarts", solve.restarts, "Restarts for sb or sa");
    solve_cmd->add_option("--i-max", solve.sb.i_max)->capture_default_str();
    solve_cmd->add_option("--steps-per-iter", solve.sb.steps_per_iter)->capture_default_str();
    solve_cmd->add_option("--dt", solve.sb.dt)->capture_default_str();
    solve_cmd->add_option("--c", solve.sb.c)->capture_default_str();
    solve_cmd->add_option("--x-init-scale", solve.sb.x_init_scale)->capture_default_str();
    solve_cmd->add_option("--sweeps", solve.sa.sweeps)->capture_default_str();
    solve_cmd->add_option("--cooling-ratio", solve.sa.cooling_ratio)->capture_default_str();
    solve_cmd->add_option("--initial-temperature", solve.initial_temperature);
    solve_cmd->add_option("--w-carbon", solve.w_carbon, "Cost per gCO2")->capture_default_str();
    solve_cmd->add_option("--w-pressure", solve.w_pressure, "Override the calibrated weight");
    solve_cmd->add_option("--w-comfort", solve.w_comfort, "Override the calibrated weight");

    BenchOptions bench;
    auto* bench_cmd = app.add_subcommand("bench", "Run a benchmark suite and export the report");
    bench_cmd->add_option("suite", bench.suite, "Suite JSON")->required();
    bench_cmd->add_option("--threads", bench.threads, "Worker threads (0 = all cores)");

    CarbonOptions carbon;
    auto* carbon_cmd = app.add_subcommand("carbon", "Attribute emissions to an energy series");
    carbon_cmd->add_option("energy", carbon.energy, "Energy CSV (kWh)")->required();
    carbon_cmd->add_option("intensity", carbon.intensity, "Carbon-intensity CSV (gCO2/kWh)")->required();
    carbon_cmd->add_option("--bucket", carbon.bucket)
        ->check(CLI::IsMember({"daily", "monthly", "total"}))
        ->capture_default_str();
    carbon_cmd->add_option("--interval-hours", carbon.interval_hours)->capture_default_str();

    ReportOptions report;
    auto* report_cmd = app.add_subcommand("report", "Verify a bench report against its traces");
    report_cmd->add_option("report", report.report, "report.json or its directory")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "sbopt: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        if (*gen_cmd) return run_gen(g, gen);
        if (*solve_cmd) return run_solve(g, solve);
        if (*bench_cmd) return run_bench(g, bench);
        if (*carbon_cmd) return run_carbon(g, carbon);
        if (*report_cmd) return run_report(report);
    } catch (const sbopt::UsageError& e) {
        std::cerr << "sbopt: " << e.what() << '\n';
        return kExitUsage;
    } catch (const sbopt::RefusalError& e) {
        std::cerr << "sbopt: " << e.what() << '\n';
        return kExitUsage;
    } catch (const sbopt::InfeasibleInstanceError& e) {
        std::cerr << "sbopt: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "sbopt: internal error: " << e.what() << '\n';
        return kExitInternal;
    }
    return kExitInternal;
}
