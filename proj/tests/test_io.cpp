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

#include "sbopt/io.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <limits>
#include <string>

#include "sbopt/errors.hpp"
#include "test_util.hpp"

namespace sbopt {
namespace {

TEST(QuboJson, ParsesRunningExample) {
    const QuboMatrix q = io::qubo_from_json(R"({"n": 2, "entries": [[0, 0, -1], [0, 1, 2], [1, 1, -1]]})");
    EXPECT_EQ(q.size(), 2U);
    EXPECT_EQ(q(0, 1), 1.0);
    EXPECT_EQ(energy(q, BinaryVector{1, 1}), 0.0);
}

TEST(QuboJson, RoundTripPreservesEnergies) {
    const QuboMatrix q = testing::random_qubo(6, 2).scaled(3.0);
    const QuboMatrix back = io::qubo_from_json(io::qubo_to_json(q));
    for (std::uint64_t code = 0; code < 64; ++code) {
        const auto s = bits_from_code(code, 6);
        EXPECT_DOUBLE_EQ(energy(back, s), energy(q, s));
    }
    const QuboMatrix with_offset = io::qubo_from_json(R"({"n": 1, "entries": [], "offset": 2.5})");
    EXPECT_EQ(io::qubo_from_json(io::qubo_to_json(with_offset)).offset(), 2.5);
}

TEST(QuboJson, RejectsMalformed) {
    for (const char* bad : {"", "{", "[]", R"({"n": 0, "entries": []})",
                            R"({"n": 2, "entries": [[1, 0, 1.0]]})",
                            R"({"n": 2, "entries": [[0, 2, 1.0]]})",
                            R"({"n": 2, "entries": [[0, 1]]})",
                            R"({"n": 2, "entries": [[0, 1, "x"]]})",
                            R"({"n": -1, "entries": []})",
                            R"({"n": 2, "entries": [], "extra": 1})",
                            R"({"n": 2})"}) {
        EXPECT_THROW(io::qubo_from_json(bad), UsageError) << bad;
    }
}

TEST(InstanceJson, RoundTrip) {
    const auto inst = testing::small_instance(12, 3, 2, 9);
    const std::string text = io::instance_to_json(inst);
    EXPECT_TRUE(io::is_instance_document(text));
    EXPECT_FALSE(io::is_instance_document(R"({"n": 1, "entries": []})"));
    const auto back = io::instance_from_json(text);
    EXPECT_EQ(io::instance_to_json(back), text);
    EXPECT_EQ(back.demand, inst.demand);
    EXPECT_EQ(back.carbon.values, inst.carbon.values);
    EXPECT_EQ(back.carbon.start_index, inst.carbon.start_index);
    EXPECT_EQ(back.dr_loads[1].max_activations, inst.dr_loads[1].max_activations);
}

TEST(InstanceJson, RequiresFormatVersion) {
    auto text = io::instance_to_json(testing::small_instance(1, 1, 1, 2));
    const auto pos = text.find("\"format_version\": 1");
    ASSERT_NE(pos, std::string::npos);
    EXPECT_THROW(io::instance_from_json(std::string(text).replace(pos, 19, "\"format_version\": 2")),
                 UsageError);
}

TEST(InstanceJson, InfeasibleDemandIsReported) {
    auto inst = testing::small_instance(1, 1, 1, 2);
    inst.demand[0] = 1e6;
    // Serialization does not validate; loading does.
    SchedulingInstance copy = inst;
    EXPECT_THROW(io::instance_from_json(io::instance_to_json(copy)), InfeasibleInstanceError);
}

TEST(SeriesCsv, RoundTripKeepsStartIndex) {
    const EnergySeries e{{1.5, 0.0, 2.25, 1e-3}, 0.25, 40};
    const std::string text = io::series_to_csv(e);
    EXPECT_EQ(text.substr(0, 15), "interval,value\n");
    const auto back = io::series_from_csv<EnergyTag>(text, 0.25);
    EXPECT_EQ(back.values, e.values);
    EXPECT_EQ(back.start_index, 40);
    EXPECT_EQ(back.interval_hours, 0.25);
}

TEST(SeriesCsv, AcceptsCrlfAndBlankLines) {
    const auto s = io::series_from_csv<CarbonIntensityTag>("interval,value\r\n3,100\r\n\r\n4,200\r\n", 1.0);
    EXPECT_EQ(s.values, (std::vector<double>{100.0, 200.0}));
    EXPECT_EQ(s.start_index, 3);
}

TEST(SeriesCsv, HeaderOnlyIsAnEmptySeries) {
    EXPECT_TRUE(io::series_from_csv<EnergyTag>("interval,value\n", 1.0).values.empty());
}

TEST(SeriesCsv, RejectsMalformed) {
    for (const char* bad : {"", "time,value\n0,1\n", "interval,value\n0\n", "interval,value\n0,abc\n",
                            "interval,value\n0,1\n2,1\n", "interval,value\n0,-1\n",
                            "interval,value\n0,1,2\n", "interval,value\n0,nan\n"}) {
        EXPECT_THROW(io::series_from_csv<EnergyTag>(bad, 1.0), UsageError) << bad;
    }
}

TEST(TraceCsv, RoundTripIsExact) {
    const std::vector<TracePoint> trace{{1, 0.1}, {7, -1.0 / 3.0}, {12, -1e300}};
    EXPECT_EQ(io::trace_from_csv(io::trace_to_csv(trace)), trace);
    EXPECT_THROW(io::trace_from_csv("evals,energy\n"), UsageError);
    EXPECT_THROW(io::trace_from_csv("evals,best_energy\n1\n"), UsageError);
}

TEST(FormatDouble, ShortestRoundTrip) {
    EXPECT_EQ(io::format_double(0.1), "0.1");
    EXPECT_EQ(io::format_double(2500.0), "2500");
    EXPECT_EQ(io::format_double(-1.0), "-1");
    SplitMix64 rng(1);
    for (int k = 0; k < 1000; ++k) {
        const double v = std::ldexp(rng.uniform(-1.0, 1.0), static_cast<int>(rng.below(200)) - 100);
        ASSERT_EQ(std::stod(io::format_double(v)), v);
    }
}

TEST(SolveResultJson, ContainsFields) {
    SolveResult r;
    r.best_bits = {1, 0};
    r.best_energy = -1.0;
    r.evals = 4;
    r.seed = 9;
    EXPECT_EQ(io::solve_result_to_json(r, "brute"),
              R"({"best_bits":[1,0],"best_energy":-1.0,"evals":4,"n":2,"seed":9,"solver":"brute"})");
    const ScheduleMetrics m{1.5, 200.0, 0};
    const std::string with = io::solve_result_to_json(r, "sb", &m);
    EXPECT_NE(with.find(R"("metrics":{"carbon_g":200.0,"energy_cost":1.5,"violations":0})"),
              std::string::npos);
}

TEST(SuiteJson, SeedsWithTemplate) {
    const BenchSuite s = io::suite_from_json(R"({
        "format_version": 1, "w_carbon": 0.001, "threads": 2,
        "sb": {"i_max": 7, "c": 2.0, "restarts": 3},
        "sa": {"sweeps": 11, "initial_temperature": 4.0},
        "template": {"compressors": 3, "horizon": 5},
        "seeds": [8, 9]})");
    ASSERT_EQ(s.instances.size(), 2U);
    EXPECT_EQ(s.instances[1].seed, 9U);
    EXPECT_EQ(s.instances[1].compressors, 3U);
    EXPECT_EQ(s.instances[1].horizon, 5U);
    EXPECT_EQ(s.instances[1].dr_loads, GenParams{}.dr_loads);
    EXPECT_EQ(s.w_carbon, 0.001);
    EXPECT_EQ(s.threads, 2U);
    EXPECT_EQ(s.sb.i_max, 7U);
    EXPECT_EQ(s.sb.c, 2.0);
    EXPECT_EQ(s.sb.steps_per_iter, SbConfig{}.steps_per_iter);
    EXPECT_EQ(s.sa.sweeps, 11U);
    EXPECT_EQ(s.sa.initial_temperature, 4.0);
    const BenchSuite again = io::suite_from_json(io::suite_to_json(s));
    EXPECT_EQ(io::suite_to_json(again), io::suite_to_json(s));
}

TEST(SuiteJson, RejectsMalformed) {
    for (const char* bad : {R"({"seeds": [1]})",
                            R"({"format_version": 1, "seeds": [1], "bogus": 0})",
                            R"({"format_version": 1, "seeds": [1], "sb": {"i_max": 0}})",
                            R"({"format_version": 1, "seeds": [1], "sa": {"cooling_ratio": 2}})",
                            R"({"format_version": 1, "seeds": [1], "template": {"days": 0}})",
                            R"({"format_version": 1})",
                            R"({"format_version": 1, "seeds": "x"})"}) {
        EXPECT_THROW(io::suite_from_json(bad), UsageError) << bad;
    }
}

TEST(GenParamsJson, RoundTrip) {
    GenParams p;
    p.seed = 123456789012345ULL;
    p.noise = 0.0;
    p.carbon_max = 900.0;
    const GenParams back = io::gen_params_from_json(io::gen_params_to_json(p));
    EXPECT_EQ(io::gen_params_to_json(back), io::gen_params_to_json(p));
    EXPECT_EQ(back.seed, p.seed);
}

TEST(ReportJson, RoundTripIncludingUnreachedAndErrors) {
    BenchReport report;
    report.tolerance = 0.01;
    InstanceReport inst;
    inst.seed = 4;
    inst.bits = 2;
    inst.best_known = -1.0;
    inst.best_known_exact = true;
    SolverRun ok;
    ok.solver = "sa";
    ok.result.best_bits = {1, 0};
    ok.result.best_energy = -1.0;
    ok.result.trace = {{3, -1.0}};
    ok.result.evals = 3;
    ok.metrics = {0.5, 12.0, 0};
    SolverRun failed;
    failed.solver = "sb";
    failed.error = "oscillator 0 left the safety bound";
    inst.runs = {ok, failed};
    report.instances.push_back(inst);
    summarize(report);
    report.fingerprints = {{"suite", "0123456789abcdef"}};
    const std::string text = io::report_to_json(report);
    const BenchReport back = io::report_from_json(text);
    EXPECT_EQ(io::report_to_json(back), text);
    EXPECT_TRUE(back.instances[0].runs[1].error.has_value());
    EXPECT_EQ(back.instances[0].runs[0].evals_to_within, 3U);
}

TEST(Files, ReadMissingNamesThePath) {
    try {
        io::read_text("/nonexistent/sbopt/file.json");
        FAIL();
    } catch (const UsageError& e) {
        EXPECT_NE(std::string(e.what()).find("/nonexistent/sbopt/file.json"), std::string::npos);
    }
}

TEST(Files, WriteCreatesParentsAndReadsBack) {
    const auto dir = std::filesystem::temp_directory_path() / "sbopt_test_io" / "nested";
    std::filesystem::remove_all(dir.parent_path());
    io::write_text(dir / "x.txt", "hello\n");
    EXPECT_EQ(io::read_text(dir / "x.txt"), "hello\n");
    std::filesystem::remove_all(dir.parent_path());
}

}  // namespace
}  // namespace sbopt
