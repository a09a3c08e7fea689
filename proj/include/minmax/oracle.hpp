#pragma once

#include "minmax/instance.hpp"

namespace minmax {

// Every position an optimal placement could use: all pairwise cost-line
// crossings on eligible edges (any slope signs) plus every lowest boundary
// point, deduplicated. Deliberately wider than what the solvers enumerate.
struct CandidateSet {
    std::vector<EdgePoint> points;
};

// Guard: at most `max_candidates` points, else an error asking for a smaller
// instance.
CandidateSet oracle_candidates(const Instance& inst, std::size_t max_candidates = 5000);

// Reference answer by exhaustive enumeration of all candidate subsets of size
// <= k, each scored by full shortest-path evaluation. Costs never touch the
// cost-line machinery, so the two paths check each other.
Solution solve_bruteforce(const Instance& inst, std::size_t max_candidates = 5000,
                          double max_subsets = 1e7);

} // namespace minmax
