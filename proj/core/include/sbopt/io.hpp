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

#include <filesystem>
#include <string>
#include <vector>

#include "sbopt/baselines.hpp"
#include "sbopt/bench.hpp"
#include "sbopt/carbon.hpp"
#include "sbopt/instance_gen.hpp"
#include "sbopt/qubo.hpp"
#include "sbopt/sb_solver.hpp"
#include "sbopt/scheduler.hpp"
#include "sbopt/solve_result.hpp"

// File formats. Parsers throw UsageError on malformed input, read_text throws
// UsageError naming a missing path and writers throw std::runtime_error naming
// the path.
namespace sbopt::io {

inline constexpr int kFormatVersion = 1;

std::string read_text(const std::filesystem::path& path);
void write_text(const std::filesystem::path& path, const std::string& text);

/// {"n": int, "entries": [[i, j, value], ...], "offset": real (optional)}, i <= j.
QuboMatrix qubo_from_json(const std::string& text);
std::string qubo_to_json(const QuboMatrix& q);

/// {"format_version": 1, "horizon", "interval_hours", "compressors": [...],
///  "dr_loads": [...], "price": [...], "demand": [...],
///  "carbon": {"values": [...], "interval_hours", "start_index"}}
SchedulingInstance instance_from_json(const std::string& text);
std::string instance_to_json(const SchedulingInstance& instance);

/// True when the JSON document looks like a scheduling instance rather than a QUBO.
bool is_instance_document(const std::string& text);

/// "interval,value" CSV. interval is the absolute interval index; the first
/// row fixes start_index and rows must be consecutive.
template <typename Tag>
IntervalSeries<Tag> series_from_csv(const std::string& text, double interval_hours);
template <typename Tag>
std::string series_to_csv(const IntervalSeries<Tag>& series);

/// "evals,best_energy" CSV.
std::string trace_to_csv(const std::vector<TracePoint>& trace);
std::vector<TracePoint> trace_from_csv(const std::string& text);

/// Shortest round-trip decimal form of a double.
std::string format_double(double value);

/// Adds a "metrics" object when ``metrics`` is given (scheduling instances).
std::string solve_result_to_json(const SolveResult& result, const std::string& solver,
                                 const ScheduleMetrics* metrics = nullptr);

GenParams gen_params_from_json(const std::string& text);
std::string gen_params_to_json(const GenParams& params);
std::string sb_config_to_json(const SbConfig& cfg);
std::string sa_config_to_json(const SaConfig& cfg);

/// {"format_version": 1, "w_carbon", "tolerance", "brute_force_max_bits",
///  "threads", "sb": {...}, "sa": {...},
///  "instances": [GenParams...] or "seeds": [...] with "template": GenParams}
BenchSuite suite_from_json(const std::string& text);
std::string suite_to_json(const BenchSuite& suite);

std::string report_to_json(const BenchReport& report);
BenchReport report_from_json(const std::string& text);

}  // namespace sbopt::io
