#pragma once

#include <map>
#include <optional>
#include <vector>

#include "minmax/instance.hpp"

namespace minmax {

struct NlcInterval {
    double lo = 0.0;
    double hi = 0.0;
};

// All points within distance c.dist of the client: per edge, the offset
// intervals that lie inside the search radius. A new server can lower the
// client's cost only inside this region.
struct NLC {
    int client = -1;
    double radius = 0.0;
    std::map<int, std::vector<NlcInterval>> intervals; // edge -> disjoint, sorted
};

// One maximal linear run of the cost function on an edge. Slope is +/- the
// client weight except for degenerate single-point runs.
struct LinearPiece {
    double t0 = 0.0, t1 = 0.0;
    double c0 = 0.0, c1 = 0.0;
    bool live = true; // solvers retire pieces whose minimum exceeds curmax

    double value_at(double t) const {
        if (t1 <= t0) return c0;
        double u = (t - t0) / (t1 - t0);
        return c0 + u * (c1 - c0);
    }
    double min_cost() const { return c0 < c1 ? c0 : c1; }
    double max_cost() const { return c0 > c1 ? c0 : c1; }
    bool degenerate() const { return t1 - t0 <= kEps; }
    double slope() const { return degenerate() ? 0.0 : (c1 - c0) / (t1 - t0); }
    bool contains(double t) const { return t >= t0 - kEps && t <= t1 + kEps; }
};

// Client Cost Line: t -> weight * d(client, point at t), restricted to the
// client's reachable region on one edge. Values never exceed the client's
// current cost; a run ending strictly inside the edge ends at exactly that
// cost.
struct CCL {
    int client = -1;
    int edge = -1;
    std::vector<LinearPiece> pieces; // disjoint domains, sorted by t0

    bool empty() const { return pieces.empty(); }
    std::optional<double> value_at(double t) const {
        for (const LinearPiece& p : pieces)
            if (p.contains(t)) return p.value_at(t);
        return std::nullopt;
    }
    double min_cost() const;
    double max_cost() const;
};

NLC build_nlc(const Instance& inst, const CostTable& table, int client);

// Core builder; `client_map` must be a search from the client's position with
// radius at least the client's nearest-server distance.
CCL build_ccl(const Instance& inst, const CostTable& table, int client, int edge,
              const DistanceMap& client_map);
// Convenience overload that runs the truncated search itself.
CCL build_ccl(const Instance& inst, const CostTable& table, int client, int edge);

} // namespace minmax
