#include "minmax/oracle.hpp"

#include <algorithm>
#include <cmath>

#include "minmax/ccl.hpp"
#include "minmax/errors.hpp"
#include "minmax/psp.hpp"

namespace minmax {

namespace {

// Crossing of two pieces from different clients, any slope combination.
void any_slope_intersections(const LinearPiece& p, const LinearPiece& q,
                             std::vector<CclPoint>& out) {
    if (p.degenerate() || q.degenerate()) return;
    double sp = p.slope(), sq = q.slope();
    if (std::abs(sp - sq) <= kEps) return; // parallel or collinear
    double lo = std::max(p.t0, q.t0), hi = std::min(p.t1, q.t1);
    if (lo > hi + kEps) return;
    double t = ((q.c0 - sq * q.t0) - (p.c0 - sp * p.t0)) / (sp - sq);
    if (t < lo - kEps || t > hi + kEps) return;
    out.push_back({std::clamp(t, lo, hi), p.value_at(std::clamp(t, lo, hi))});
}

} // namespace

CandidateSet oracle_candidates(const Instance& inst, std::size_t max_candidates) {
    inst.validate();
    CostTable table = compute_cost_table(inst);

    CandidateSet set;
    auto add = [&](int edge, double offset) {
        EdgePoint p{edge, offset};
        for (const EdgePoint& q : set.points)
            if (same_point(inst.net(), p, q)) return;
        set.points.push_back(p);
        if (set.points.size() > max_candidates)
            throw guard_error("candidate set exceeds " + std::to_string(max_candidates) +
                              " points; use a smaller instance");
    };

    std::vector<DistanceMap> maps;
    maps.reserve(inst.clients.size());
    for (std::size_t c = 0; c < inst.clients.size(); ++c)
        maps.push_back(truncated_dijkstra(inst.net(), inst.clients[c].position,
                                          table.entries[c].dist));

    for (int e : inst.eligible_edges) {
        std::vector<CCL> ccls;
        for (std::size_t c = 0; c < inst.clients.size(); ++c) {
            CCL ccl = build_ccl(inst, table, static_cast<int>(c), e, maps[c]);
            if (!ccl.empty()) ccls.push_back(std::move(ccl));
        }
        for (const CCL& ccl : ccls)
            if (auto lb = lb_point(ccl)) add(e, lb->offset);
        std::vector<CclPoint> crossings;
        for (std::size_t i = 0; i < ccls.size(); ++i)
            for (std::size_t j = i + 1; j < ccls.size(); ++j)
                for (const LinearPiece& p : ccls[i].pieces)
                    for (const LinearPiece& q : ccls[j].pieces)
                        any_slope_intersections(p, q, crossings);
        for (const CclPoint& pt : crossings) add(e, pt.offset);
    }
    return set;
}

Solution solve_bruteforce(const Instance& inst, std::size_t max_candidates, double max_subsets) {
    CandidateSet cands = oracle_candidates(inst, max_candidates);
    const int n = static_cast<int>(cands.points.size());
    const int k = std::min(inst.k, n);

    double combos = 1.0;
    {
        double total = 1.0; // sum over sizes 0..k of C(n, size)
        double c = 1.0;
        for (int s = 1; s <= k; ++s) {
            c = c * (n - s + 1) / s;
            total += c;
        }
        combos = total;
    }
    if (combos > max_subsets)
        throw guard_error("subset enumeration would touch about " + std::to_string(combos) +
                          " candidates; guard is " + std::to_string(max_subsets));

    // Per-candidate cost vectors from one shortest-path search each; subsets
    // are then scored by component minima.
    CostTable table = compute_cost_table(inst);
    const std::size_t nc = inst.clients.size();
    std::vector<std::vector<double>> cand_cost(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        DistanceMap dm = truncated_dijkstra(inst.net(), cands.points[static_cast<std::size_t>(i)], kInf);
        auto& v = cand_cost[static_cast<std::size_t>(i)];
        v.resize(nc);
        for (std::size_t c = 0; c < nc; ++c)
            v[c] = inst.clients[c].weight *
                   distance_to_point(inst.net(), dm, inst.clients[c].position);
    }
    std::vector<double> base(nc);
    for (std::size_t c = 0; c < nc; ++c) base[c] = table.entries[c].cost;

    double best = 0.0;
    for (std::size_t c = 0; c < nc; ++c) best = std::max(best, base[c]);
    std::vector<int> best_subset;

    std::vector<int> chosen;
    std::vector<std::vector<double>> stack{base};
    auto score = [&](const std::vector<double>& v) {
        double m = 0.0;
        for (double x : v) m = std::max(m, x);
        return m;
    };
    auto rec = [&](auto&& self, int from) -> void {
        if (static_cast<int>(chosen.size()) == k) return;
        for (int i = from; i < n; ++i) {
            std::vector<double> v = stack.back();
            const auto& cc = cand_cost[static_cast<std::size_t>(i)];
            for (std::size_t c = 0; c < nc; ++c) v[c] = std::min(v[c], cc[c]);
            chosen.push_back(i);
            double s = score(v);
            if (s < best) {
                best = s;
                best_subset = chosen;
            }
            stack.push_back(std::move(v));
            self(self, i + 1);
            stack.pop_back();
            chosen.pop_back();
        }
    };
    rec(rec, 0);

    std::vector<EdgePoint> placements;
    for (int i : best_subset) placements.push_back(cands.points[static_cast<std::size_t>(i)]);
    return evaluate_cmax(inst, std::move(placements), true);
}

} // namespace minmax
