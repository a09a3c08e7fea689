#pragma once

#include <cstdint>

#include "minmax/instance.hpp"

namespace minmax {

struct SolverConfig {
    // Strategy toggles, honored by solve_quick only.
    bool s1 = true; // skip an iteration when the incumbent already covers the new client
    bool s2 = true; // per-edge virtual candidates certify an early jump
    bool s3 = true; // dominance pruning between candidate points
    bool s4 = true; // drop intersections of cost lines that sit entirely below the bar

    // Abort with a budget error instead of running away; 0 = unlimited.
    std::uint64_t max_candidates_per_iteration = 0;

    // Disable the outer early return and scan every client (test hook).
    bool full_scan = false;

    // Snap the approximation's placements onto the eligible edge set.
    bool approx_respect_e0 = false;
};

struct SolverStats {
    int iterations = 0;
    int s1_skips = 0;
    int s2_skips = 0;
    long long s3_pruned = 0;        // dominance events across iterations
    long long s4_dismissed = 0;     // intersections dropped at generation
    long long psps_generated = 0;
    long long candidates_explored = 0;
    int stop_rank = 0;              // 1-based rank where the scan stopped, 0 = full
};

struct SolveResult {
    Solution solution;
    SolverStats stats;
};

// Optimal placements over the eligible edges. When nothing can be improved,
// returns the empty placement with cmax equal to the highest client cost.
SolveResult solve_exact(const Instance& inst, const SolverConfig& cfg = {});

// Same optimum as solve_exact, computed with the early-termination and
// pruning strategies enabled in the config. Placements may differ.
SolveResult solve_quick(const Instance& inst, const SolverConfig& cfg = {});

// k rounds of "put a server on the currently worst client". Placements are
// client positions and ignore the eligible set unless approx_respect_e0.
SolveResult solve_approx(const Instance& inst, const SolverConfig& cfg = {});

// k rounds of the exact single-server optimum, each treating previous
// placements as full servers.
SolveResult solve_greedy(const Instance& inst, const SolverConfig& cfg = {});

} // namespace minmax
