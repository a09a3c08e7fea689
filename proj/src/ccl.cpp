#include "minmax/ccl.hpp"

#include <algorithm>
#include <cmath>

#include "minmax/errors.hpp"

namespace minmax {

double CCL::min_cost() const {
    double m = kInf;
    for (const LinearPiece& p : pieces) m = std::min(m, p.min_cost());
    return m;
}

double CCL::max_cost() const {
    double m = -kInf;
    for (const LinearPiece& p : pieces) m = std::max(m, p.max_cost());
    return pieces.empty() ? 0.0 : m;
}

namespace {

// Distance from the client to the point at offset t, using only routes that
// matter within the search radius: through either endpoint, or directly along
// the edge when the client sits on it.
struct EdgeDistanceFn {
    double da = kInf;      // client -> endpoint a
    double db = kInf;      // client -> endpoint b
    double length = 0.0;
    double tc = -1.0;      // client offset when on this edge, else < 0

    double operator()(double t) const {
        double d = kInf;
        if (da != kInf) d = std::min(d, da + t);
        if (db != kInf) d = std::min(d, db + (length - t));
        if (tc >= 0.0) d = std::min(d, std::abs(t - tc));
        return d;
    }
    bool defined() const { return da != kInf || db != kInf || tc >= 0.0; }
};

// Maximal linear runs of min(fn, radius-ball boundary) scaled by weight.
// Returned domains are the sub-intervals where fn <= radius.
std::vector<LinearPiece> envelope_pieces(const EdgeDistanceFn& fn, double radius, double weight) {
    std::vector<LinearPiece> out;
    if (!fn.defined()) return out;
    const double L = fn.length;

    // Candidate breakpoints: edge ends, pairwise crossings of the linear
    // branches, and crossings with the radius level.
    std::vector<std::pair<double, double>> lines; // (slope, intercept)
    if (fn.da != kInf) lines.emplace_back(1.0, fn.da);
    if (fn.db != kInf) lines.emplace_back(-1.0, fn.db + L);
    if (fn.tc >= 0.0) {
        lines.emplace_back(-1.0, fn.tc);
        lines.emplace_back(1.0, -fn.tc);
    }
    std::vector<double> breaks = {0.0, L};
    for (std::size_t i = 0; i < lines.size(); ++i) {
        for (std::size_t j = i + 1; j < lines.size(); ++j) {
            if (lines[i].first == lines[j].first) continue;
            double t = (lines[j].second - lines[i].second) / (lines[i].first - lines[j].first);
            if (t > 0.0 && t < L) breaks.push_back(t);
        }
        double t = (radius - lines[i].second) / lines[i].first;
        if (t > 0.0 && t < L) breaks.push_back(t);
    }
    std::sort(breaks.begin(), breaks.end());
    breaks.erase(std::unique(breaks.begin(), breaks.end(),
                             [](double x, double y) { return y - x <= kEps; }),
                 breaks.end());
    if (breaks.back() < L) breaks.back() = L;

    for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
        double x = breaks[i], y = breaks[i + 1];
        double dx = fn(x), dy = fn(y);
        bool inx = dx <= radius + kEps;
        bool iny = dy <= radius + kEps;
        if (!inx && !iny) continue;
        double px = x, py = y, cx = dx, cy = dy;
        if (!inx) { // crosses the radius inside; keep the inner part
            px = x + (y - x) * ((dx - radius) / (dx - dy));
            cx = radius;
        }
        if (!iny) {
            py = x + (y - x) * ((radius - dx) / (dy - dx));
            cy = radius;
        }
        LinearPiece piece;
        piece.t0 = px;
        piece.t1 = py;
        piece.c0 = std::min(cx, radius) * weight;
        piece.c1 = std::min(cy, radius) * weight;
        out.push_back(piece);
    }

    // Merge contiguous collinear runs and drop duplicate degenerate touches.
    std::vector<LinearPiece> merged;
    for (const LinearPiece& p : out) {
        if (!merged.empty()) {
            LinearPiece& q = merged.back();
            bool contiguous = approx_eq(q.t1, p.t0) && approx_eq(q.c1, p.c0);
            if (contiguous && p.degenerate()) continue;
            if (contiguous && q.degenerate()) {
                q = p;
                continue;
            }
            if (contiguous) {
                double s_q = q.slope(), s_p = p.slope();
                if (approx_eq(s_q, s_p, 1e-7)) {
                    q.t1 = p.t1;
                    q.c1 = p.c1;
                    continue;
                }
            }
        }
        merged.push_back(p);
    }
    return merged;
}

EdgeDistanceFn edge_distance_fn(const Instance& inst, const DistanceMap& map, int client,
                                int edge) {
    const Edge& e = inst.net().edge(edge);
    EdgeDistanceFn fn;
    fn.length = e.length;
    fn.da = map.at(e.a);
    fn.db = map.at(e.b);
    if (inst.clients[static_cast<std::size_t>(client)].position.edge == edge)
        fn.tc = inst.clients[static_cast<std::size_t>(client)].position.offset;
    return fn;
}

} // namespace

NLC build_nlc(const Instance& inst, const CostTable& table, int client) {
    const Client& c = inst.clients[static_cast<std::size_t>(client)];
    double radius = table.entries[static_cast<std::size_t>(client)].dist;
    DistanceMap map = truncated_dijkstra(inst.net(), c.position, radius);

    NLC nlc;
    nlc.client = client;
    nlc.radius = radius;
    for (int e = 0; e < inst.net().edge_count(); ++e) {
        EdgeDistanceFn fn = edge_distance_fn(inst, map, client, e);
        if (!fn.defined()) continue;
        auto pieces = envelope_pieces(fn, radius, c.weight);
        if (pieces.empty()) continue;
        std::vector<NlcInterval>& ivals = nlc.intervals[e];
        for (const LinearPiece& p : pieces) {
            if (!ivals.empty() && approx_eq(ivals.back().hi, p.t0))
                ivals.back().hi = p.t1;
            else
                ivals.push_back({p.t0, p.t1});
        }
    }
    return nlc;
}

CCL build_ccl(const Instance& inst, const CostTable& table, int client, int edge,
              const DistanceMap& client_map) {
    const Client& c = inst.clients[static_cast<std::size_t>(client)];
    double radius = table.entries[static_cast<std::size_t>(client)].dist;

    CCL ccl;
    ccl.client = client;
    ccl.edge = edge;
    EdgeDistanceFn fn = edge_distance_fn(inst, client_map, client, edge);
    if (fn.defined()) ccl.pieces = envelope_pieces(fn, radius, c.weight);
    return ccl;
}

CCL build_ccl(const Instance& inst, const CostTable& table, int client, int edge) {
    const Client& c = inst.clients[static_cast<std::size_t>(client)];
    double radius = table.entries[static_cast<std::size_t>(client)].dist;
    DistanceMap map = truncated_dijkstra(inst.net(), c.position, radius);
    return build_ccl(inst, table, client, edge, map);
}

} // namespace minmax
