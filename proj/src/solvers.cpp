#include "minmax/solvers.hpp"

#include <algorithm>
#include <cassert>
#include <cstdio>
#include <cstdlib>
#include <cmath>
#include <limits>
#include <map>
#include <optional>

#include "minmax/ccl.hpp"
#include "minmax/errors.hpp"
#include "minmax/psp.hpp"

namespace minmax {

namespace {

struct Placed {
    EdgePoint pos;
    double cost = 0.0;
};

// Shared implementation of the exact scan and its strategy-accelerated
// variant. Clients are visited in non-increasing cost order; each iteration
// narrows the answer to the band between consecutive client costs, maintains
// the candidate-point pool, and looks for a point set of size <= k whose
// coverage spans the prefix seen so far.
class Engine {
public:
    Engine(const Instance& inst, const SolverConfig& cfg, bool quick)
        : inst_(inst), cfg_(cfg), quick_(quick) {}

    SolveResult run() {
        table_ = compute_cost_table(inst_);
        const std::size_t nc = inst_.clients.size();
        order_ = table_.order;
        if (order_.empty()) {
            SolveResult r;
            r.solution.cmax = 0.0;
            r.stats = stats_;
            return r;
        }

        geom_.resize(nc);
        prefix_ = Bitset(nc);

        const int n = static_cast<int>(order_.size());
        for (int m = 1; m <= n; ++m) {
            const int cm = order_[static_cast<std::size_t>(m - 1)];
            curmax_ = cost_of(cm);
            next_cost_ = m < n ? cost_of(order_[static_cast<std::size_t>(m)]) : 0.0;
            prefix_.set(static_cast<std::size_t>(cm));
            prefix_list_.push_back(cm);
            ++stats_.iterations;

            build_geometry(cm);
            pending_.push_back(cm);
            retire_expensive_psps();
            retire_expensive_pieces();

            if (quick_ && cfg_.s1 && ksp_set_ && approx_le(ksp_maxcost_, next_cost_) &&
                ksp_covers(cm)) {
                ++stats_.s1_skips;
                continue;
            }
            // The per-edge certificates back both the strategy-2 jump and the
            // strategy-4 dismissals, so they exist whenever either is on.
            if (use_virtuals()) rebuild_virtuals();
            if (quick_ && cfg_.s2 && try_virtual_jump()) {
                ++stats_.s2_skips;
                continue;
            }

            process_pending();
            if (quick_ && cfg_.s3) recompute_dominated();
            if (quick_ && cfg_.s4) apply_s4_exclusions();

            search_candidates();
            for (PoolEntry& p : pool_) p.dirty = false;

            if (std::getenv("MINMAX_TRACE"))
                fprintf(stderr, "iter m=%d client=%d curmax=%.9g next=%.9g pool=%zu\n", m, cm,
                        curmax_, next_cost_, pool_.size());
            if (!cfg_.full_scan && strictly_gt(curmax_, next_cost_)) {
                stats_.stop_rank = m;
                return finalize(curmax_);
            }
        }
        return finalize(cfg_.full_scan ? std::optional<double>() : std::optional<double>(curmax_));
    }

private:
    struct ClientGeom {
        bool built = false;
        DistanceMap dmap;
        std::map<int, CCL> ccls; // eligible edge -> nonempty cost line
    };

    struct PoolEntry {
        EdgePoint pos;
        double cost = 0.0;
        PspOrigin origin = PspOrigin::LB;
        Bitset covered;
        int parent_a = -1; // generating cost lines, intersections only
        int parent_b = -1;
        bool alive = true;
        bool dominated = false;
        bool s4_excluded = false;
        bool dirty = true;
    };

    double cost_of(int client) const {
        return table_.entries[static_cast<std::size_t>(client)].cost;
    }

    bool use_virtuals() const { return quick_ && (cfg_.s2 || cfg_.s4); }

    const CCL* ccl_of(int client, int edge) const {
        const ClientGeom& g = geom_[static_cast<std::size_t>(client)];
        auto it = g.ccls.find(edge);
        return it == g.ccls.end() ? nullptr : &it->second;
    }

    void build_geometry(int client) {
        ClientGeom& g = geom_[static_cast<std::size_t>(client)];
        if (g.built) return;
        const Client& c = inst_.clients[static_cast<std::size_t>(client)];
        double radius = table_.entries[static_cast<std::size_t>(client)].dist;
        g.dmap = truncated_dijkstra(inst_.net(), c.position, radius);
        for (int e : inst_.eligible_edges) {
            CCL ccl = build_ccl(inst_, table_, client, e, g.dmap);
            if (!ccl.empty()) g.ccls.emplace(e, std::move(ccl));
        }
        g.built = true;
    }

    // Points that can no longer be part of an improving candidate are gone
    // for good: the acceptance bar only tightens as the scan advances.
    void retire_expensive_psps() {
        for (PoolEntry& p : pool_)
            if (p.alive && p.cost >= curmax_ + kEps) p.alive = false;
    }

    void retire_expensive_pieces() {
        for (int client : prefix_list_) {
            for (auto& [edge, ccl] : geom_[static_cast<std::size_t>(client)].ccls)
                for (LinearPiece& piece : ccl.pieces)
                    if (piece.live && piece.min_cost() >= curmax_ + kEps) piece.live = false;
        }
    }

    bool point_covers(double cost, int edge, double offset, int client) const {
        return covers(inst_.net(), cost, edge, offset, client, table_, ccl_of(client, edge));
    }

    bool ksp_covers(int client) const {
        for (const Placed& p : ksp_)
            if (point_covers(p.cost, p.pos.edge, p.pos.offset, client)) return true;
        return false;
    }

    void rebuild_virtuals() {
        auto ccls_on_edge = [&](int edge) {
            std::vector<const CCL*> out;
            for (int client : prefix_list_)
                if (const CCL* c = ccl_of(client, edge)) out.push_back(c);
            return out;
        };
        virtuals_ = virtual_psps(inst_.eligible_edges, next_cost_, ccls_on_edge,
                                 inst_.clients.size());
        std::erase_if(virtuals_, [](const PSP& p) { return !p.covered.any(); });
    }

    // Materialize one virtual point: the highest spot among the covered cost
    // lines on its edge covers all of them at a cost below the bar.
    Placed materialize_virtual(const PSP& v) const {
        double best_cost = -kInf;
        double best_t = 0.0;
        for (int client : prefix_list_) {
            if (!v.covered.test(static_cast<std::size_t>(client))) continue;
            const CCL* ccl = ccl_of(client, v.edge);
            if (!ccl) continue;
            for (const LinearPiece& piece : ccl->pieces) {
                if (!piece.live) continue;
                if (piece.c0 > best_cost) { best_cost = piece.c0; best_t = piece.t0; }
                if (piece.c1 > best_cost) { best_cost = piece.c1; best_t = piece.t1; }
            }
        }
        assert(best_cost > -kInf);
        return {EdgePoint{v.edge, best_t}, best_cost};
    }

    bool try_virtual_jump() {
        // Cover the prefix with <= k whole-edge certificates.
        Bitset covered(inst_.clients.size());
        std::vector<int> picks;
        if (!virtual_cover(covered, picks)) return false;
        std::vector<Placed> chosen;
        for (int idx : picks)
            chosen.push_back(materialize_virtual(virtuals_[static_cast<std::size_t>(idx)]));
        adopt(std::move(chosen));
        return true;
    }

    bool virtual_cover(const Bitset& covered, std::vector<int>& picks) {
        if (covered.contains_all(prefix_)) return true;
        if (static_cast<int>(picks.size()) == inst_.k) return false;
        int want = lowest_uncovered(covered);
        for (std::size_t i = 0; i < virtuals_.size(); ++i) {
            const PSP& v = virtuals_[i];
            if (!v.covered.test(static_cast<std::size_t>(want))) continue;
            Bitset next_cov = covered;
            next_cov |= v.covered;
            picks.push_back(static_cast<int>(i));
            if (virtual_cover(next_cov, picks)) return true;
            picks.pop_back();
        }
        return false;
    }

    int lowest_uncovered(const Bitset& covered) const {
        for (int client : prefix_list_)
            if (!covered.test(static_cast<std::size_t>(client))) return client;
        return -1;
    }

    void adopt(std::vector<Placed> placed) {
        ksp_ = std::move(placed);
        ksp_set_ = true;
        ksp_maxcost_ = 0.0;
        for (const Placed& p : ksp_) ksp_maxcost_ = std::max(ksp_maxcost_, p.cost);
    }

    // Coverage bookkeeping and candidate-point generation for every client
    // whose iteration was deferred, in rank order.
    void process_pending() {
        for (int client : pending_) {
            for (PoolEntry& p : pool_) {
                if (!p.alive || p.covered.test(static_cast<std::size_t>(client))) continue;
                if (point_covers(p.cost, p.pos.edge, p.pos.offset, client)) {
                    p.covered.set(static_cast<std::size_t>(client));
                    p.dirty = true;
                }
            }
            generate_psps(client);
            registered_.push_back(client);
        }
        pending_.clear();
    }

    void generate_psps(int client) {
        ClientGeom& g = geom_[static_cast<std::size_t>(client)];
        for (auto& [edge, ccl] : g.ccls) {
            if (auto lb = lb_point(ccl))
                add_psp(edge, lb->offset, lb->cost, PspOrigin::LB);
            for (const CclPoint& bp : boundary_points(ccl, inst_.net().edge(edge).length))
                add_psp(edge, bp.offset, bp.cost, PspOrigin::LB);

            auto& on_edge = edge_ccls_[edge];
            for (int other : on_edge) {
                const CCL* oc = ccl_of(other, edge);
                if (!oc) continue;
                for (const CclPoint& pt : r3_intersections_with(ccl, {oc}))
                    add_psp(edge, pt.offset, pt.cost, PspOrigin::Intersection, client, other);
            }
            on_edge.push_back(client);
        }
    }

    void add_psp(int edge, double offset, double cost, PspOrigin origin, int parent_a = -1,
                 int parent_b = -1) {
        if (cost >= curmax_ + kEps) return;
        for (PoolEntry& p : pool_) {
            if (!p.alive || p.pos.edge != edge) continue;
            if (approx_eq(p.pos.offset, offset) && approx_eq(p.cost, cost)) {
                // Coincident point: fold coverage into the existing entry.
                Bitset merged = p.covered;
                merged |= coverage_at(edge, offset, cost);
                if (!(merged == p.covered)) {
                    p.covered = std::move(merged);
                    p.dirty = true;
                }
                return;
            }
        }
        PoolEntry entry;
        entry.pos = {edge, offset};
        entry.cost = cost;
        entry.origin = origin;
        entry.covered = coverage_at(edge, offset, cost);
        entry.parent_a = parent_a;
        entry.parent_b = parent_b;
        pool_.push_back(std::move(entry));
        ++stats_.psps_generated;
    }

    // Strategy 4. An intersection of two cost lines that both stay under the
    // bar is set aside for this iteration when the edge's virtual point
    // demonstrably stands in for it; any candidate using the point can swap
    // in the virtual point without losing coverage or raising its value past
    // the bar. The subsumption is rechecked every iteration because the bar
    // drops as the scan advances.
    void apply_s4_exclusions() {
        for (PoolEntry& p : pool_) {
            p.s4_excluded = false;
            if (!p.alive || p.origin != PspOrigin::Intersection || p.parent_a < 0) continue;
            const CCL* a = ccl_of(p.parent_a, p.pos.edge);
            const CCL* b = ccl_of(p.parent_b, p.pos.edge);
            if (!a || !b) continue;
            if (keep_intersection(*a, *b, next_cost_)) continue;
            const Bitset* vcov = nullptr;
            for (const PSP& v : virtuals_)
                if (v.edge == p.pos.edge) { vcov = &v.covered; break; }
            bool subsumed = vcov ? p.covered.subset_of(*vcov) : !p.covered.any();
            if (subsumed) {
                p.s4_excluded = true;
                ++stats_.s4_dismissed;
            }
        }
    }

    Bitset coverage_at(int edge, double offset, double cost) const {
        Bitset cov(inst_.clients.size());
        for (int client : registered_)
            if (point_covers(cost, edge, offset, client)) cov.set(static_cast<std::size_t>(client));
        for (int client : pending_)
            if (point_covers(cost, edge, offset, client)) cov.set(static_cast<std::size_t>(client));
        return cov;
    }

    void recompute_dominated() {
        std::vector<PSP> view;
        std::vector<int> pool_index;
        for (std::size_t i = 0; i < pool_.size(); ++i) {
            if (!pool_[i].alive) continue;
            PSP p;
            p.edge = pool_[i].pos.edge;
            p.offset = pool_[i].pos.offset;
            p.cost = pool_[i].cost;
            p.origin = pool_[i].origin;
            p.covered = pool_[i].covered;
            view.push_back(std::move(p));
            pool_index.push_back(static_cast<int>(i));
        }
        std::size_t actual_count = view.size();
        for (const PSP& v : virtuals_) view.push_back(v);

        PruneResult pr = prune_dominated(view, next_cost_);
        for (PoolEntry& p : pool_) p.dominated = false;
        long long pruned_actuals = 0;
        for (int idx : pr.pruned) {
            // Virtual points stay searchable no matter what: strategy 4's
            // exclusions lean on them, and letting an equal-coverage actual
            // point knock one out while strategy 4 simultaneously defers to
            // it would lose the coverage both ways.
            if (static_cast<std::size_t>(idx) >= actual_count) continue;
            pool_[static_cast<std::size_t>(pool_index[static_cast<std::size_t>(idx)])].dominated = true;
            ++pruned_actuals;
        }
        stats_.s3_pruned += pruned_actuals;
    }

    // Members the candidate search may combine this iteration.
    struct Member {
        bool is_virtual = false;
        int index = 0; // into pool_ or virtuals_
        double cost = 0.0;
        const Bitset* covered = nullptr;
    };

    std::vector<Member> search_members() const {
        std::vector<Member> ms;
        for (std::size_t i = 0; i < pool_.size(); ++i) {
            const PoolEntry& p = pool_[i];
            if (!p.alive || p.dominated || p.s4_excluded) continue;
            ms.push_back({false, static_cast<int>(i), p.cost, &p.covered});
        }
        if (use_virtuals()) {
            for (std::size_t i = 0; i < virtuals_.size(); ++i)
                ms.push_back({true, static_cast<int>(i), virtuals_[i].cost, &virtuals_[i].covered});
        }
        return ms;
    }

    void search_candidates() {
        members_ = search_members();
        iter_candidates_ = 0;
        stop_search_ = false;
        Bitset covered(inst_.clients.size());
        chosen_.clear();
        descend(covered, 0.0);
    }

    void descend(const Bitset& covered, double maxcost) {
        if (stop_search_) return;
        if (covered.contains_all(prefix_)) {
            ++iter_candidates_;
            ++stats_.candidates_explored;
            if (cfg_.max_candidates_per_iteration != 0 &&
                iter_candidates_ > cfg_.max_candidates_per_iteration)
                throw guard_error("budget exhausted: more than " +
                                  std::to_string(cfg_.max_candidates_per_iteration) +
                                  " k-candidates in one iteration");
            if (maxcost < curmax_) {
                std::vector<Placed> placed;
                for (const Member* m : chosen_) {
                    if (m->is_virtual)
                        placed.push_back(materialize_virtual(virtuals_[static_cast<std::size_t>(m->index)]));
                    else {
                        const PoolEntry& p = pool_[static_cast<std::size_t>(m->index)];
                        placed.push_back({p.pos, p.cost});
                    }
                }
                adopt(std::move(placed));
                curmax_ = maxcost;
                if (approx_le(curmax_, next_cost_)) stop_search_ = true;
            }
            return;
        }
        if (static_cast<int>(chosen_.size()) == inst_.k) return;
        int want = lowest_uncovered(covered);
        for (Member& m : members_) {
            if (stop_search_) return;
            if (m.cost >= curmax_) continue;
            if (!m.covered->test(static_cast<std::size_t>(want))) continue;
            Bitset next_cov = covered;
            next_cov |= *m.covered;
            chosen_.push_back(&m);
            descend(next_cov, std::max(maxcost, m.cost));
            chosen_.pop_back();
        }
    }

    SolveResult finalize(std::optional<double> expected) {
        std::vector<EdgePoint> placements;
        for (const Placed& p : ksp_) {
            bool dup = false;
            for (const EdgePoint& q : placements)
                if (same_point(inst_.net(), p.pos, q)) { dup = true; break; }
            if (!dup) placements.push_back(p.pos);
        }
        SolveResult r;
        r.solution = evaluate_cmax(inst_, std::move(placements), true);
        r.stats = stats_;
        if (expected &&
            std::abs(r.solution.cmax - *expected) > 1e-6 * std::max(1.0, std::abs(*expected)))
            throw std::logic_error("solver inconsistency: achieved cmax " +
                                   std::to_string(r.solution.cmax) + " but bound says " +
                                   std::to_string(*expected));
        return r;
    }

    const Instance& inst_;
    SolverConfig cfg_;
    bool quick_;

    CostTable table_;
    std::vector<int> order_;
    std::vector<ClientGeom> geom_;
    std::vector<PoolEntry> pool_;
    std::vector<PSP> virtuals_;
    std::map<int, std::vector<int>> edge_ccls_; // edge -> clients with a registered line
    Bitset prefix_;
    std::vector<int> prefix_list_;
    std::vector<int> registered_;
    std::vector<int> pending_;

    std::vector<Placed> ksp_;
    bool ksp_set_ = false;
    double ksp_maxcost_ = kInf;
    double curmax_ = 0.0;
    double next_cost_ = 0.0;

    std::vector<Member> members_;
    std::vector<const Member*> chosen_;
    std::uint64_t iter_candidates_ = 0;
    bool stop_search_ = false;

    SolverStats stats_;
};

} // namespace

SolveResult solve_exact(const Instance& inst, const SolverConfig& cfg) {
    return Engine(inst, cfg, false).run();
}

SolveResult solve_quick(const Instance& inst, const SolverConfig& cfg) {
    return Engine(inst, cfg, true).run();
}

namespace {

EdgePoint nearest_eligible_point(const Instance& inst, const EdgePoint& from) {
    if (inst.eligible(from.edge)) return from;
    DistanceMap dm = truncated_dijkstra(inst.net(), from, kInf);
    double best = kInf;
    EdgePoint where{inst.eligible_edges.front(), 0.0};
    for (int e : inst.eligible_edges) {
        const Edge& edge = inst.net().edge(e);
        double da = dm.at(edge.a);
        double db = dm.at(edge.b);
        if (da < best - kEps) { best = da; where = {e, 0.0}; }
        if (db < best - kEps) { best = db; where = {e, edge.length}; }
    }
    if (best == kInf)
        throw invalid_input("no eligible edge reachable from the requested placement");
    return where;
}

} // namespace

SolveResult solve_approx(const Instance& inst, const SolverConfig& cfg) {
    CostTable table = compute_cost_table(inst);
    std::vector<double> cost(inst.clients.size());
    for (std::size_t i = 0; i < cost.size(); ++i) cost[i] = table.entries[i].cost;

    SolveResult r;
    std::vector<EdgePoint> placements;
    for (int round = 0; round < inst.k; ++round) {
        ++r.stats.iterations;
        std::size_t pick = 0;
        for (std::size_t i = 1; i < cost.size(); ++i)
            if (cost[i] > cost[pick] + kEps) pick = i;
        EdgePoint pos = inst.clients[pick].position;
        if (cfg.approx_respect_e0) pos = nearest_eligible_point(inst, pos);
        placements.push_back(pos);
        DistanceMap dm = truncated_dijkstra(inst.net(), pos, kInf);
        for (std::size_t i = 0; i < cost.size(); ++i) {
            double d = distance_to_point(inst.net(), dm, inst.clients[i].position);
            cost[i] = std::min(cost[i], inst.clients[i].weight * d);
        }
    }
    r.solution = evaluate_cmax(inst, std::move(placements), /*enforce_eligible=*/false);
    return r;
}

SolveResult solve_greedy(const Instance& inst, const SolverConfig& cfg) {
    inst.validate();
    SolveResult r;
    std::vector<EdgePoint> placements;
    for (int round = 0; round < inst.k; ++round) {
        Instance aug = inst;
        aug.servers.insert(aug.servers.end(), placements.begin(), placements.end());
        aug.k = 1;
        SolveResult step = solve_exact(aug, cfg);
        ++r.stats.iterations;
        r.stats.candidates_explored += step.stats.candidates_explored;
        r.stats.psps_generated += step.stats.psps_generated;
        if (step.solution.placements.empty()) break;
        placements.insert(placements.end(), step.solution.placements.begin(),
                          step.solution.placements.end());
    }
    r.solution = evaluate_cmax(inst, std::move(placements), true);
    return r;
}

} // namespace minmax
