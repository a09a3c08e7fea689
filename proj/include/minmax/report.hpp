#pragma once

#include <string>
#include <vector>

#include "minmax/solvers.hpp"

namespace minmax {

struct SolverReport {
    std::string alg;
    double cmax = 0.0;
    double gain = 0.0;
    double gain_ratio = 0.0;
    double seconds = 0.0;
    std::vector<EdgePoint> placements;
    SolverStats stats;
};

// One comparison block per k: the exact optimum (via the quick solver), the
// approximation, and the greedy baseline, plus their relative errors on gain.
struct CompareReport {
    int k = 1;
    double max_cost = 0.0;
    std::vector<SolverReport> rows; // opt, approx, greedy
    double err_approx = 0.0;        // (gain_opt - gain_approx) / gain_opt, 0 when gain_opt = 0
    double err_greedy = 0.0;

    const SolverReport* find(const std::string& alg) const;
};

std::string solver_report_to_json(const SolverReport& r);
SolverReport solver_report_from_json(const std::string& text);

std::string compare_reports_to_json(const std::vector<CompareReport>& reports);
std::vector<CompareReport> compare_reports_from_json(const std::string& text);

// Fixed-point table in the shape used for solver comparisons: one column per
// k, blocks of Gain / GR / relative error / time.
std::string compare_reports_to_table(const std::vector<CompareReport>& reports);

CompareReport run_compare(const Instance& inst, int k, const SolverConfig& cfg = {});

} // namespace minmax
