#include "minmax/report.hpp"

#include <chrono>
#include <cmath>
#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "minmax/errors.hpp"

namespace minmax {

namespace {

using nlohmann::json;

json stats_to_json(const SolverStats& s) {
    return json{{"iterations", s.iterations},
                {"s1_skips", s.s1_skips},
                {"s2_skips", s.s2_skips},
                {"s3_pruned", s.s3_pruned},
                {"s4_dismissed", s.s4_dismissed},
                {"psps_generated", s.psps_generated},
                {"candidates_explored", s.candidates_explored},
                {"stop_rank", s.stop_rank}};
}

SolverStats stats_from_json(const json& j) {
    SolverStats s;
    s.iterations = j.at("iterations").get<int>();
    s.s1_skips = j.at("s1_skips").get<int>();
    s.s2_skips = j.at("s2_skips").get<int>();
    s.s3_pruned = j.at("s3_pruned").get<long long>();
    s.s4_dismissed = j.at("s4_dismissed").get<long long>();
    s.psps_generated = j.at("psps_generated").get<long long>();
    s.candidates_explored = j.at("candidates_explored").get<long long>();
    s.stop_rank = j.at("stop_rank").get<int>();
    return s;
}

json placements_to_json(const std::vector<EdgePoint>& ps) {
    json arr = json::array();
    for (const EdgePoint& p : ps) arr.push_back({{"edge", p.edge}, {"offset", p.offset}});
    return arr;
}

std::vector<EdgePoint> placements_from_json(const json& arr) {
    std::vector<EdgePoint> out;
    for (const auto& p : arr) out.push_back({p.at("edge").get<int>(), p.at("offset").get<double>()});
    return out;
}

json report_to_json_obj(const SolverReport& r) {
    return json{{"alg", r.alg},
                {"cmax", r.cmax},
                {"gain", r.gain},
                {"gain_ratio", r.gain_ratio},
                {"seconds", r.seconds},
                {"placements", placements_to_json(r.placements)},
                {"stats", stats_to_json(r.stats)}};
}

SolverReport report_from_json_obj(const json& j) {
    SolverReport r;
    r.alg = j.at("alg").get<std::string>();
    r.cmax = j.at("cmax").get<double>();
    r.gain = j.at("gain").get<double>();
    r.gain_ratio = j.at("gain_ratio").get<double>();
    r.seconds = j.at("seconds").get<double>();
    r.placements = placements_from_json(j.at("placements"));
    r.stats = stats_from_json(j.at("stats"));
    return r;
}

} // namespace

const SolverReport* CompareReport::find(const std::string& alg) const {
    for (const SolverReport& r : rows)
        if (r.alg == alg) return &r;
    return nullptr;
}

std::string solver_report_to_json(const SolverReport& r) {
    return report_to_json_obj(r).dump(2) + "\n";
}

SolverReport solver_report_from_json(const std::string& text) {
    try {
        return report_from_json_obj(json::parse(text));
    } catch (const json::exception& e) {
        throw parse_error(std::string("report JSON: ") + e.what());
    }
}

std::string compare_reports_to_json(const std::vector<CompareReport>& reports) {
    json arr = json::array();
    for (const CompareReport& c : reports) {
        json rows = json::array();
        for (const SolverReport& r : c.rows) rows.push_back(report_to_json_obj(r));
        arr.push_back({{"k", c.k},
                       {"max", c.max_cost},
                       {"rows", rows},
                       {"err_approx", c.err_approx},
                       {"err_greedy", c.err_greedy}});
    }
    return arr.dump(2) + "\n";
}

std::vector<CompareReport> compare_reports_from_json(const std::string& text) {
    std::vector<CompareReport> out;
    try {
        json arr = json::parse(text);
        for (const auto& j : arr) {
            CompareReport c;
            c.k = j.at("k").get<int>();
            c.max_cost = j.at("max").get<double>();
            for (const auto& r : j.at("rows")) c.rows.push_back(report_from_json_obj(r));
            c.err_approx = j.at("err_approx").get<double>();
            c.err_greedy = j.at("err_greedy").get<double>();
            out.push_back(std::move(c));
        }
    } catch (const json::exception& e) {
        throw parse_error(std::string("report JSON: ") + e.what());
    }
    return out;
}

std::string compare_reports_to_table(const std::vector<CompareReport>& reports) {
    std::ostringstream os;
    os << std::fixed;
    auto row = [&](const std::string& label, auto getter, int precision) {
        os << std::setw(22) << std::left << label;
        os << std::setprecision(precision);
        for (const CompareReport& c : reports) os << std::setw(12) << std::right << getter(c);
        os << '\n';
    };
    os << std::setw(22) << std::left << "k";
    for (const CompareReport& c : reports) os << std::setw(12) << std::right << c.k;
    os << '\n';
    row("Max", [](const CompareReport& c) { return c.max_cost; }, 1);
    for (const char* alg : {"opt", "approx", "greedy"}) {
        row(std::string("Gain (") + alg + ")",
            [alg](const CompareReport& c) { return c.find(alg) ? c.find(alg)->gain : 0.0; }, 1);
    }
    for (const char* alg : {"opt", "approx", "greedy"}) {
        row(std::string("GR (") + alg + ") (%)",
            [alg](const CompareReport& c) {
                return c.find(alg) ? 100.0 * c.find(alg)->gain_ratio : 0.0;
            },
            1);
    }
    row("Err (approx)", [](const CompareReport& c) { return c.err_approx; }, 2);
    row("Err (greedy)", [](const CompareReport& c) { return c.err_greedy; }, 2);
    for (const char* alg : {"opt", "approx", "greedy"}) {
        row(std::string("Time (") + alg + ")(s)",
            [alg](const CompareReport& c) { return c.find(alg) ? c.find(alg)->seconds : 0.0; }, 3);
    }
    return os.str();
}

namespace {

SolverReport timed_run(const std::string& alg, const Instance& inst, double max_cost,
                       const SolverConfig& cfg) {
    auto t0 = std::chrono::steady_clock::now();
    SolveResult res;
    if (alg == "opt")
        res = solve_quick(inst, cfg);
    else if (alg == "approx")
        res = solve_approx(inst, cfg);
    else
        res = solve_greedy(inst, cfg);
    auto t1 = std::chrono::steady_clock::now();

    SolverReport r;
    r.alg = alg;
    r.cmax = res.solution.cmax;
    auto [gain, ratio] = metrics(max_cost, res.solution.cmax);
    r.gain = gain;
    r.gain_ratio = ratio;
    r.seconds = std::chrono::duration<double>(t1 - t0).count();
    r.placements = res.solution.placements;
    r.stats = res.stats;
    return r;
}

} // namespace

CompareReport run_compare(const Instance& inst, int k, const SolverConfig& cfg) {
    Instance with_k = inst;
    with_k.k = k;
    CostTable table = compute_cost_table(with_k);

    CompareReport c;
    c.k = k;
    c.max_cost = table.max_cost();
    for (const char* alg : {"opt", "approx", "greedy"})
        c.rows.push_back(timed_run(alg, with_k, c.max_cost, cfg));

    double gain_opt = c.rows[0].gain;
    c.err_approx = gain_opt > 0.0 ? (gain_opt - c.rows[1].gain) / gain_opt : 0.0;
    c.err_greedy = gain_opt > 0.0 ? (gain_opt - c.rows[2].gain) / gain_opt : 0.0;
    return c;
}

} // namespace minmax
