#include "minmax/psp.hpp"

#include <algorithm>
#include <cmath>

namespace minmax {

std::optional<CclPoint> lb_point(const CCL& ccl) {
    std::optional<CclPoint> best;
    auto offer = [&](double t, double c) {
        if (!best || c < best->cost - kEps ||
            (approx_eq(c, best->cost) && t < best->offset - kEps)) {
            best = CclPoint{t, c};
        }
    };
    for (const LinearPiece& p : ccl.pieces) {
        if (!p.live) continue;
        offer(p.t0, p.c0);
        offer(p.t1, p.c1);
    }
    if (best && best->cost <= kEps) best->cost = std::max(0.0, best->cost);
    return best;
}

std::vector<CclPoint> boundary_points(const CCL& ccl, double edge_length) {
    std::vector<CclPoint> out;
    for (const LinearPiece& p : ccl.pieces) {
        if (!p.live) continue;
        if (p.t0 <= kEps) out.push_back({p.t0, p.c0});
        if (p.t1 >= edge_length - kEps) out.push_back({p.t1, p.c1});
    }
    return out;
}

namespace {

void intersect_pieces(const LinearPiece& p, const LinearPiece& q, std::vector<CclPoint>& out) {
    if (p.degenerate() || q.degenerate()) return;
    double sp = p.slope(), sq = q.slope();
    if (!((sp > 0.0 && sq < 0.0) || (sp < 0.0 && sq > 0.0))) return;
    double lo = std::max(p.t0, q.t0), hi = std::min(p.t1, q.t1);
    if (lo > hi + kEps) return;
    // p: c = p.c0 + sp (t - p.t0); q likewise. Opposite signs, so sp != sq.
    double t = ((q.c0 - sq * q.t0) - (p.c0 - sp * p.t0)) / (sp - sq);
    if (t < lo - kEps || t > hi + kEps) return;
    t = std::clamp(t, lo, hi);
    out.push_back({t, p.value_at(t)});
}

void intersect_ccls(const CCL& a, const CCL& b, std::vector<CclPoint>& out) {
    for (const LinearPiece& p : a.pieces) {
        if (!p.live) continue;
        for (const LinearPiece& q : b.pieces) {
            if (!q.live) continue;
            intersect_pieces(p, q, out);
        }
    }
}

} // namespace

std::vector<CclPoint> r3_intersections(const std::vector<const CCL*>& ccls_on_edge) {
    std::vector<CclPoint> out;
    for (std::size_t i = 0; i < ccls_on_edge.size(); ++i)
        for (std::size_t j = i + 1; j < ccls_on_edge.size(); ++j) {
            if (ccls_on_edge[i]->client == ccls_on_edge[j]->client) continue;
            intersect_ccls(*ccls_on_edge[i], *ccls_on_edge[j], out);
        }
    return out;
}

std::vector<CclPoint> r3_intersections_with(const CCL& fresh,
                                            const std::vector<const CCL*>& others) {
    std::vector<CclPoint> out;
    for (const CCL* other : others) {
        if (other->client == fresh.client) continue;
        intersect_ccls(fresh, *other, out);
    }
    return out;
}

bool covers(const RoadNetwork&, double cost, int, double offset, int client,
            const CostTable& table, const CCL* ccl_on_edge) {
    if (approx_le(table.entries[static_cast<std::size_t>(client)].cost, cost)) return true;
    if (!ccl_on_edge) return false;
    for (const LinearPiece& p : ccl_on_edge->pieces) {
        if (!p.live || !p.contains(offset)) continue;
        if (approx_le(p.value_at(offset), cost)) return true;
    }
    return false;
}

double zmax(const std::vector<int>& clients, const PSP& p, const CostTable& table,
            const std::function<const CCL*(int client, int edge)>& ccl_lookup,
            const RoadNetwork& net) {
    double worst_uncovered = 0.0;
    for (int c : clients) {
        bool cov;
        if (p.is_virtual())
            cov = p.covered.size() > static_cast<std::size_t>(c) && p.covered.test(static_cast<std::size_t>(c));
        else
            cov = covers(net, p.cost, p.edge, p.offset, c, table, ccl_lookup(c, p.edge));
        if (!cov)
            worst_uncovered =
                std::max(worst_uncovered, table.entries[static_cast<std::size_t>(c)].cost);
    }
    return std::max(p.cost, worst_uncovered);
}

PruneResult prune_dominated(const std::vector<PSP>& psps, double threshold) {
    const std::size_t n = psps.size();
    std::vector<bool> dropped(n, false);

    auto tie_order_before = [&](const PSP& x, const PSP& y) {
        if (x.edge != y.edge) return x.edge < y.edge;
        if (x.is_virtual() != y.is_virtual()) return !x.is_virtual();
        return x.offset < y.offset;
    };

    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j || dropped[i] || dropped[j]) continue;
            const PSP& a = psps[i];
            const PSP& b = psps[j];
            // Equal coverage: keep the cheaper point.
            if (a.covered == b.covered) {
                if (a.cost < b.cost - kEps) dropped[j] = true;
                else if (b.cost < a.cost - kEps) dropped[i] = true;
                else if (i < j) dropped[tie_order_before(a, b) ? j : i] = true;
                continue;
            }
            // Strictly smaller coverage at strictly lower cost, both under the
            // threshold: the richer point stands in for the poorer one here.
            if (a.cost < b.cost - kEps && strictly_lt(b.cost, threshold) &&
                a.covered.proper_subset_of(b.covered)) {
                dropped[i] = true;
            }
        }
    }

    PruneResult r;
    for (std::size_t i = 0; i < n; ++i)
        (dropped[i] ? r.pruned : r.kept).push_back(static_cast<int>(i));
    return r;
}

std::vector<PSP> virtual_psps(const std::vector<int>& eligible_edges, double threshold,
                              const std::function<std::vector<const CCL*>(int edge)>& ccls,
                              std::size_t n_clients) {
    std::vector<PSP> out;
    out.reserve(eligible_edges.size());
    for (int e : eligible_edges) {
        PSP p;
        p.edge = e;
        p.offset = std::numeric_limits<double>::quiet_NaN();
        p.cost = threshold;
        p.origin = PspOrigin::Virtual;
        p.covered = Bitset(n_clients);
        for (const CCL* ccl : ccls(e)) {
            if (ccl->empty()) continue;
            bool whole_line_live = true;
            double max_cost = -kInf;
            for (const LinearPiece& piece : ccl->pieces) {
                if (!piece.live) { whole_line_live = false; break; }
                max_cost = std::max(max_cost, piece.max_cost());
            }
            if (whole_line_live && strictly_lt(max_cost, threshold))
                p.covered.set(static_cast<std::size_t>(ccl->client));
        }
        out.push_back(std::move(p));
    }
    return out;
}

bool ccl_active(const CCL& ccl, double threshold) {
    for (const LinearPiece& p : ccl.pieces)
        if (!p.live || approx_ge(p.max_cost(), threshold)) return true;
    return false;
}

bool keep_intersection(const CCL& parent_a, const CCL& parent_b, double threshold) {
    return ccl_active(parent_a, threshold) || ccl_active(parent_b, threshold);
}

} // namespace minmax
