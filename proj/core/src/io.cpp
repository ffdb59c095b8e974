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

#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "sbopt/errors.hpp"

namespace sbopt::io {

using nlohmann::json;

namespace {

json parse_json(const std::string& text, const char* what) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw UsageError(std::string(what) + ": " + e.what());
    }
}

void reject_unknown(const json& obj, std::initializer_list<const char*> allowed, const char* what) {
    if (!obj.is_object()) throw UsageError(std::string(what) + " must be a JSON object");
    std::set<std::string> keys(allowed.begin(), allowed.end());
    for (const auto& [key, _] : obj.items()) {
        if (!keys.count(key)) throw UsageError(std::string(what) + ": unknown key '" + key + "'");
    }
}

template <typename T>
T get_or(const json& obj, const char* key, T fallback, const char* what) {
    if (!obj.contains(key)) return fallback;
    try {
        return obj.at(key).get<T>();
    } catch (const json::exception& e) {
        throw UsageError(std::string(what) + "." + key + ": " + e.what());
    }
}

template <typename T>
T get_required(const json& obj, const char* key, const char* what) {
    if (!obj.is_object() || !obj.contains(key)) {
        throw UsageError(std::string(what) + ": missing key '" + key + "'");
    }
    try {
        return obj.at(key).get<T>();
    } catch (const json::exception& e) {
        throw UsageError(std::string(what) + "." + key + ": " + e.what());
    }
}

std::size_t get_count(const json& obj, const char* key, std::size_t fallback, const char* what) {
    if (!obj.contains(key)) return fallback;
    const json& v = obj.at(key);
    if (!v.is_number_integer() || v.get<std::int64_t>() < 0) {
        throw UsageError(std::string(what) + "." + key + " must be a nonnegative integer");
    }
    return v.get<std::size_t>();
}

std::string bits_to_string(const BinaryVector& bits) {
    std::string out(bits.size(), '0');
    for (std::size_t i = 0; i < bits.size(); ++i) out[i] = bits[i] ? '1' : '0';
    return out;
}

BinaryVector bits_from_string(const std::string& text) {
    BinaryVector out(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] != '0' && text[i] != '1') throw UsageError("bit strings may contain only 0 and 1");
        out[i] = text[i] == '1';
    }
    return out;
}

json gen_params_json(const GenParams& p) {
    return {{"seed", p.seed},
            {"days", p.days},
            {"nodes", p.nodes},
            {"customers", p.customers},
            {"intervals_per_day", p.intervals_per_day},
            {"compressors", p.compressors},
            {"dr_loads", p.dr_loads},
            {"horizon", p.horizon},
            {"start_hour", p.start_hour},
            {"noise", p.noise},
            {"carbon_min", p.carbon_min},
            {"carbon_max", p.carbon_max}};
}

GenParams gen_params_from(const json& j, const GenParams& base) {
    const char* what = "GenParams";
    reject_unknown(j,
                   {"seed", "days", "nodes", "customers", "intervals_per_day", "compressors",
                    "dr_loads", "horizon", "start_hour", "noise", "carbon_min", "carbon_max"},
                   what);
    GenParams p = base;
    p.seed = get_or<std::uint64_t>(j, "seed", p.seed, what);
    p.days = get_count(j, "days", p.days, what);
    p.nodes = get_count(j, "nodes", p.nodes, what);
    p.customers = get_count(j, "customers", p.customers, what);
    p.intervals_per_day = get_count(j, "intervals_per_day", p.intervals_per_day, what);
    p.compressors = get_count(j, "compressors", p.compressors, what);
    p.dr_loads = get_count(j, "dr_loads", p.dr_loads, what);
    p.horizon = get_count(j, "horizon", p.horizon, what);
    p.start_hour = get_count(j, "start_hour", p.start_hour, what);
    p.noise = get_or<double>(j, "noise", p.noise, what);
    p.carbon_min = get_or<double>(j, "carbon_min", p.carbon_min, what);
    p.carbon_max = get_or<double>(j, "carbon_max", p.carbon_max, what);
    p.validate();
    return p;
}

json sb_json(const SbConfig& c) {
    return {{"i_max", c.i_max},
            {"steps_per_iter", c.steps_per_iter},
            {"dt", c.dt},
            {"c", c.c},
            {"restarts", c.restarts},
            {"seed", c.seed},
            {"x_init_scale", c.x_init_scale},
            {"blow_up_bound", c.blow_up_bound},
            {"normalize", c.normalize}};
}

SbConfig sb_from(const json& j) {
    const char* what = "sb";
    reject_unknown(j,
                   {"i_max", "steps_per_iter", "dt", "c", "restarts", "seed", "x_init_scale",
                    "blow_up_bound", "normalize"},
                   what);
    SbConfig c;
    c.i_max = get_count(j, "i_max", c.i_max, what);
    c.steps_per_iter = get_count(j, "steps_per_iter", c.steps_per_iter, what);
    c.dt = get_or<double>(j, "dt", c.dt, what);
    c.c = get_or<double>(j, "c", c.c, what);
    c.restarts = get_count(j, "restarts", c.restarts, what);
    c.seed = get_or<std::uint64_t>(j, "seed", c.seed, what);
    c.x_init_scale = get_or<double>(j, "x_init_scale", c.x_init_scale, what);
    c.blow_up_bound = get_or<double>(j, "blow_up_bound", c.blow_up_bound, what);
    c.normalize = get_or<bool>(j, "normalize", c.normalize, what);
    c.validate();
    return c;
}

json sa_json(const SaConfig& c) {
    json t = c.initial_temperature ? json(*c.initial_temperature) : json(nullptr);
    return {{"initial_temperature", t},
            {"cooling_ratio", c.cooling_ratio},
            {"sweeps", c.sweeps},
            {"seed", c.seed},
            {"restarts", c.restarts}};
}

SaConfig sa_from(const json& j) {
    const char* what = "sa";
    reject_unknown(j, {"initial_temperature", "cooling_ratio", "sweeps", "seed", "restarts"}, what);
    SaConfig c;
    if (j.contains("initial_temperature") && !j.at("initial_temperature").is_null()) {
        c.initial_temperature = get_or<double>(j, "initial_temperature", 1.0, what);
    }
    c.cooling_ratio = get_or<double>(j, "cooling_ratio", c.cooling_ratio, what);
    c.sweeps = get_count(j, "sweeps", c.sweeps, what);
    c.seed = get_or<std::uint64_t>(j, "seed", c.seed, what);
    c.restarts = get_count(j, "restarts", c.restarts, what);
    c.validate();
    return c;
}

json optional_number(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

double real_or_inf(const json& j) {
    if (j.is_null()) return std::numeric_limits<double>::infinity();
    return j.get<double>();
}

std::optional<double> optional_from(const json& j) {
    if (j.is_null()) return std::nullopt;
    return j.get<double>();
}

}  // namespace

std::string read_text(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_text(const std::filesystem::path& path, const std::string& text) {
    if (path.has_parent_path()) {
        std::error_code ec;
        std::filesystem::create_directories(path.parent_path(), ec);
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << text;
    if (!out) throw std::runtime_error("failed writing " + path.string());
}

std::string format_double(double value) {
    char buf[64];
    const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value);
    if (ec != std::errc{}) throw std::runtime_error("cannot format number");
    return std::string(buf, end);
}

QuboMatrix qubo_from_json(const std::string& text) {
    const json j = parse_json(text, "QUBO file");
    const char* what = "QUBO file";
    reject_unknown(j, {"n", "entries", "offset"}, what);
    const std::size_t n = get_count(j, "n", 0, what);
    if (n == 0) throw UsageError("QUBO file: n must be >= 1");
    if (!j.contains("entries") || !j.at("entries").is_array()) {
        throw UsageError("QUBO file: 'entries' must be an array");
    }
    std::vector<QuboEntry> entries;
    for (const auto& e : j.at("entries")) {
        if (!e.is_array() || e.size() != 3 || !e[0].is_number_integer() ||
            !e[1].is_number_integer() || !e[2].is_number()) {
            throw UsageError("QUBO file: each entry must be [i, j, value]");
        }
        const auto i = e[0].get<std::int64_t>();
        const auto k = e[1].get<std::int64_t>();
        if (i < 0 || k < 0) throw UsageError("QUBO file: negative index");
        if (i > k) throw UsageError("QUBO file: entries need i <= j");
        entries.push_back({static_cast<std::size_t>(i), static_cast<std::size_t>(k), e[2].get<double>()});
    }
    return QuboMatrix::from_entries(n, entries, get_or<double>(j, "offset", 0.0, what));
}

std::string qubo_to_json(const QuboMatrix& q) {
    json entries = json::array();
    for (const auto& e : q.upper_entries()) entries.push_back({e.i, e.j, e.value});
    json j = {{"n", q.size()}, {"entries", entries}};
    if (q.offset() != 0.0) j["offset"] = q.offset();
    return j.dump() + "\n";
}

bool is_instance_document(const std::string& text) {
    const json j = parse_json(text, "input file");
    return j.is_object() && j.contains("compressors");
}

SchedulingInstance instance_from_json(const std::string& text) {
    const json j = parse_json(text, "instance file");
    const char* what = "instance";
    reject_unknown(j,
                   {"format_version", "horizon", "interval_hours", "compressors", "dr_loads",
                    "price", "demand", "carbon"},
                   what);
    const int version = get_required<int>(j, "format_version", what);
    if (version != kFormatVersion) {
        throw UsageError("instance: unsupported format_version " + std::to_string(version));
    }
    SchedulingInstance inst;
    inst.horizon = get_count(j, "horizon", 0, what);
    inst.interval_hours = get_or<double>(j, "interval_hours", 1.0, what);
    for (const auto& c : get_required<json>(j, "compressors", what)) {
        reject_unknown(c, {"id", "capacity", "energy_per_interval"}, "compressor");
        inst.compressors.push_back({get_or<std::string>(c, "id", "", "compressor"),
                                    get_required<double>(c, "capacity", "compressor"),
                                    get_required<double>(c, "energy_per_interval", "compressor")});
    }
    for (const auto& d : get_or<json>(j, "dr_loads", json::array(), what)) {
        reject_unknown(d, {"id", "curtailable_kwh", "max_activations"}, "dr_load");
        DrLoad load;
        load.id = get_or<std::string>(d, "id", "", "dr_load");
        load.curtailable_kwh = get_required<double>(d, "curtailable_kwh", "dr_load");
        load.max_activations = get_count(d, "max_activations", 0, "dr_load");
        inst.dr_loads.push_back(load);
    }
    inst.price = get_required<std::vector<double>>(j, "price", what);
    inst.demand = get_required<std::vector<double>>(j, "demand", what);
    const json carbon = get_required<json>(j, "carbon", what);
    reject_unknown(carbon, {"values", "interval_hours", "start_index"}, "carbon");
    inst.carbon.values = get_required<std::vector<double>>(carbon, "values", "carbon");
    inst.carbon.interval_hours = get_or<double>(carbon, "interval_hours", inst.interval_hours, "carbon");
    inst.carbon.start_index = get_or<std::int64_t>(carbon, "start_index", 0, "carbon");
    inst.validate();
    return inst;
}

std::string instance_to_json(const SchedulingInstance& inst) {
    json compressors = json::array();
    for (const auto& c : inst.compressors) {
        compressors.push_back(
            {{"id", c.id}, {"capacity", c.capacity}, {"energy_per_interval", c.energy_per_interval}});
    }
    json loads = json::array();
    for (const auto& d : inst.dr_loads) {
        loads.push_back({{"id", d.id},
                         {"curtailable_kwh", d.curtailable_kwh},
                         {"max_activations", d.max_activations}});
    }
    json j = {{"format_version", kFormatVersion},
              {"horizon", inst.horizon},
              {"interval_hours", inst.interval_hours},
              {"compressors", compressors},
              {"dr_loads", loads},
              {"price", inst.price},
              {"demand", inst.demand},
              {"carbon",
               {{"values", inst.carbon.values},
                {"interval_hours", inst.carbon.interval_hours},
                {"start_index", inst.carbon.start_index}}}};
    return j.dump(2) + "\n";
}

template <typename Tag>
IntervalSeries<Tag> series_from_csv(const std::string& text, double interval_hours) {
    IntervalSeries<Tag> out;
    out.interval_hours = interval_hours;
    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 0;
    bool header_seen = false;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (!header_seen) {
            if (line != "interval,value") {
                throw UsageError("series CSV must start with the header 'interval,value'");
            }
            header_seen = true;
            continue;
        }
        const auto comma = line.find(',');
        if (comma == std::string::npos) {
            throw UsageError("series CSV line " + std::to_string(line_no) + ": expected two fields");
        }
        std::int64_t index = 0;
        double value = 0.0;
        const char* begin = line.data();
        const char* end = line.data() + line.size();
        auto r1 = std::from_chars(begin, begin + comma, index);
        auto r2 = std::from_chars(begin + comma + 1, end, value);
        if (r1.ec != std::errc{} || r1.ptr != begin + comma || r2.ec != std::errc{} || r2.ptr != end) {
            throw UsageError("series CSV line " + std::to_string(line_no) + ": malformed row");
        }
        if (out.values.empty()) {
            out.start_index = index;
        } else if (index != out.start_index + static_cast<std::int64_t>(out.values.size())) {
            throw UsageError("series CSV line " + std::to_string(line_no) +
                             ": interval indices must be consecutive");
        }
        out.values.push_back(value);
    }
    if (!header_seen) throw UsageError("series CSV is empty");
    validate_series(out, "series CSV");
    return out;
}

template <typename Tag>
std::string series_to_csv(const IntervalSeries<Tag>& series) {
    std::string out = "interval,value\n";
    for (std::size_t k = 0; k < series.size(); ++k) {
        out += std::to_string(series.start_index + static_cast<std::int64_t>(k));
        out += ',';
        out += format_double(series.values[k]);
        out += '\n';
    }
    return out;
}

template CarbonIntensitySeries series_from_csv<CarbonIntensityTag>(const std::string&, double);
template EnergySeries series_from_csv<EnergyTag>(const std::string&, double);
template EmissionSeries series_from_csv<EmissionTag>(const std::string&, double);
template std::string series_to_csv(const CarbonIntensitySeries&);
template std::string series_to_csv(const EnergySeries&);
template std::string series_to_csv(const EmissionSeries&);

std::string trace_to_csv(const std::vector<TracePoint>& trace) {
    std::string out = "evals,best_energy\n";
    for (const auto& p : trace) {
        out += std::to_string(p.evals);
        out += ',';
        out += format_double(p.best_energy);
        out += '\n';
    }
    return out;
}

std::vector<TracePoint> trace_from_csv(const std::string& text) {
    std::vector<TracePoint> out;
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || (line != "evals,best_energy" && line != "evals,best_energy\r")) {
        throw UsageError("trace CSV must start with the header 'evals,best_energy'");
    }
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const auto comma = line.find(',');
        TracePoint p{};
        const char* begin = line.data();
        const char* end = begin + line.size();
        if (comma == std::string::npos ||
            std::from_chars(begin, begin + comma, p.evals).ec != std::errc{} ||
            std::from_chars(begin + comma + 1, end, p.best_energy).ec != std::errc{}) {
            throw UsageError("trace CSV: malformed row '" + line + "'");
        }
        out.push_back(p);
    }
    return out;
}

std::string solve_result_to_json(const SolveResult& result, const std::string& solver,
                                 const ScheduleMetrics* metrics) {
    json bits = json::array();
    for (auto b : result.best_bits) bits.push_back(static_cast<int>(b));
    json j = {{"solver", solver},
              {"n", result.best_bits.size()},
              {"best_bits", bits},
              {"best_energy", result.best_energy},
              {"evals", result.evals},
              {"seed", result.seed}};
    if (metrics) {
        j["metrics"] = {{"energy_cost", metrics->energy_cost},
                        {"carbon_g", metrics->carbon_g},
                        {"violations", metrics->violations}};
    }
    return j.dump();
}

GenParams gen_params_from_json(const std::string& text) {
    return gen_params_from(parse_json(text, "GenParams"), GenParams{});
}

std::string gen_params_to_json(const GenParams& params) { return gen_params_json(params).dump(); }
std::string sb_config_to_json(const SbConfig& cfg) { return sb_json(cfg).dump(); }
std::string sa_config_to_json(const SaConfig& cfg) { return sa_json(cfg).dump(); }

BenchSuite suite_from_json(const std::string& text) {
    const json j = parse_json(text, "suite file");
    const char* what = "suite";
    reject_unknown(j,
                   {"format_version", "w_carbon", "tolerance", "brute_force_max_bits", "threads",
                    "sb", "sa", "instances", "seeds", "template"},
                   what);
    const int version = get_required<int>(j, "format_version", what);
    if (version != kFormatVersion) {
        throw UsageError("suite: unsupported format_version " + std::to_string(version));
    }
    BenchSuite suite;
    suite.w_carbon = get_or<double>(j, "w_carbon", suite.w_carbon, what);
    suite.tolerance = get_or<double>(j, "tolerance", suite.tolerance, what);
    suite.brute_force_max_bits = get_count(j, "brute_force_max_bits", suite.brute_force_max_bits, what);
    suite.threads = get_count(j, "threads", suite.threads, what);
    if (j.contains("sb")) suite.sb = sb_from(j.at("sb"));
    if (j.contains("sa")) suite.sa = sa_from(j.at("sa"));
    const GenParams base = j.contains("template") ? gen_params_from(j.at("template"), GenParams{})
                                                  : GenParams{};
    if (j.contains("instances")) {
        if (!j.at("instances").is_array()) throw UsageError("suite.instances must be an array");
        for (const auto& p : j.at("instances")) suite.instances.push_back(gen_params_from(p, base));
    }
    if (j.contains("seeds")) {
        for (auto seed : get_required<std::vector<std::uint64_t>>(j, "seeds", what)) {
            GenParams p = base;
            p.seed = seed;
            suite.instances.push_back(p);
        }
    }
    if (suite.instances.empty()) throw UsageError("suite has no instances");
    if (!(suite.w_carbon >= 0.0) || !std::isfinite(suite.w_carbon)) {
        throw UsageError("suite.w_carbon must be finite and >= 0");
    }
    return suite;
}

std::string suite_to_json(const BenchSuite& suite) {
    json instances = json::array();
    for (const auto& p : suite.instances) instances.push_back(gen_params_json(p));
    json j = {{"format_version", kFormatVersion},
              {"w_carbon", suite.w_carbon},
              {"tolerance", suite.tolerance},
              {"brute_force_max_bits", suite.brute_force_max_bits},
              {"threads", suite.threads},
              {"sb", sb_json(suite.sb)},
              {"sa", sa_json(suite.sa)},
              {"instances", instances}};
    return j.dump();
}

std::string report_to_json(const BenchReport& report) {
    json instances = json::array();
    for (const auto& inst : report.instances) {
        json runs = json::array();
        for (const auto& run : inst.runs) {
            json r = {{"solver", run.solver},
                      {"best_energy", run.error ? json(nullptr) : json(run.result.best_energy)},
                      {"best_bits", bits_to_string(run.result.best_bits)},
                      {"evals", run.result.evals},
                      {"seed", run.result.seed},
                      {"evals_to_within",
                       run.evals_to_within ? json(*run.evals_to_within) : json(nullptr)},
                      {"carbon_g", run.metrics.carbon_g},
                      {"energy_cost", run.metrics.energy_cost},
                      {"violations", run.metrics.violations},
                      {"error", run.error ? json(*run.error) : json(nullptr)},
                      {"trace_file", "traces/" + std::to_string(inst.seed) + "_" + run.solver + ".csv"}};
            runs.push_back(r);
        }
        instances.push_back({{"seed", inst.seed},
                             {"params", gen_params_json(inst.params)},
                             {"bits", inst.bits},
                             {"best_known", inst.best_known},
                             {"best_known_exact", inst.best_known_exact},
                             {"runs", runs}});
    }
    json summaries = json::array();
    for (const auto& s : report.summaries) {
        summaries.push_back({{"solver", s.solver},
                             {"instances", s.instances},
                             {"failures", s.failures},
                             {"not_reached", s.not_reached},
                             {"evals_q1", optional_number(s.evals_q1)},
                             {"evals_median", optional_number(s.evals_median)},
                             {"evals_q3", optional_number(s.evals_q3)},
                             {"median_carbon_g", s.median_carbon_g},
                             {"total_carbon_g", s.total_carbon_g},
                             {"median_reduction_vs_greedy_pct", s.median_reduction_vs_greedy_pct},
                             {"pooled_reduction_vs_greedy_pct", s.pooled_reduction_vs_greedy_pct},
                             {"violations", s.violations}});
    }
    json fingerprints = json::object();
    for (const auto& [k, v] : report.fingerprints) fingerprints[k] = v;
    json j = {{"format_version", kFormatVersion},
              {"tolerance", report.tolerance},
              {"instances", instances},
              {"summaries", summaries},
              {"ablation_sb_vs_sa", {{"median_pct", report.ablation_median_pct},
                                     {"pooled_pct", report.ablation_pooled_pct}}},
              {"fingerprints", fingerprints}};
    return j.dump(2) + "\n";
}

BenchReport report_from_json(const std::string& text) {
    const json j = parse_json(text, "report file");
    const char* what = "report";
    BenchReport report;
    try {
        report.tolerance = j.at("tolerance").get<double>();
        for (const auto& ij : j.at("instances")) {
            InstanceReport inst;
            inst.seed = ij.at("seed").get<std::uint64_t>();
            inst.params = gen_params_from(ij.at("params"), GenParams{});
            inst.bits = ij.at("bits").get<std::size_t>();
            inst.best_known = real_or_inf(ij.at("best_known"));
            inst.best_known_exact = ij.at("best_known_exact").get<bool>();
            for (const auto& rj : ij.at("runs")) {
                SolverRun run;
                run.solver = rj.at("solver").get<std::string>();
                if (!rj.at("error").is_null()) run.error = rj.at("error").get<std::string>();
                if (!rj.at("best_energy").is_null()) {
                    run.result.best_energy = rj.at("best_energy").get<double>();
                }
                run.result.best_bits = bits_from_string(rj.at("best_bits").get<std::string>());
                run.result.evals = rj.at("evals").get<std::uint64_t>();
                run.result.seed = rj.at("seed").get<std::uint64_t>();
                if (!rj.at("evals_to_within").is_null()) {
                    run.evals_to_within = rj.at("evals_to_within").get<std::uint64_t>();
                }
                run.metrics.carbon_g = rj.at("carbon_g").get<double>();
                run.metrics.energy_cost = rj.at("energy_cost").get<double>();
                run.metrics.violations = rj.at("violations").get<std::size_t>();
                inst.runs.push_back(std::move(run));
            }
            report.instances.push_back(std::move(inst));
        }
        for (const auto& sj : j.at("summaries")) {
            SolverSummary s;
            s.solver = sj.at("solver").get<std::string>();
            s.instances = sj.at("instances").get<std::size_t>();
            s.failures = sj.at("failures").get<std::size_t>();
            s.not_reached = sj.at("not_reached").get<std::size_t>();
            s.evals_q1 = optional_from(sj.at("evals_q1"));
            s.evals_median = optional_from(sj.at("evals_median"));
            s.evals_q3 = optional_from(sj.at("evals_q3"));
            s.median_carbon_g = sj.at("median_carbon_g").get<double>();
            s.total_carbon_g = sj.at("total_carbon_g").get<double>();
            s.median_reduction_vs_greedy_pct = sj.at("median_reduction_vs_greedy_pct").get<double>();
            s.pooled_reduction_vs_greedy_pct = sj.at("pooled_reduction_vs_greedy_pct").get<double>();
            s.violations = sj.at("violations").get<std::size_t>();
            report.summaries.push_back(std::move(s));
        }
        report.ablation_median_pct = real_or_inf(j.at("ablation_sb_vs_sa").at("median_pct"));
        report.ablation_pooled_pct = real_or_inf(j.at("ablation_sb_vs_sa").at("pooled_pct"));
        for (const auto& [k, v] : j.at("fingerprints").items()) {
            report.fingerprints.emplace_back(k, v.get<std::string>());
        }
    } catch (const json::exception& e) {
        throw UsageError(std::string(what) + ": " + e.what());
    }
    return report;
}

}  // namespace sbopt::io
