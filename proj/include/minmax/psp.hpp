#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "minmax/ccl.hpp"

namespace minmax {

enum class PspOrigin { LB, Intersection, Virtual };

// A candidate placement. Actual points carry an offset on their edge; virtual
// ones stand for "somewhere on this edge below this cost" and are turned into
// actual points before they appear in any returned solution.
struct PSP {
    int edge = -1;
    double offset = 0.0; // meaningless when origin == Virtual
    double cost = 0.0;
    PspOrigin origin = PspOrigin::LB;
    Bitset covered; // client indices

    bool is_virtual() const { return origin == PspOrigin::Virtual; }
};

struct CclPoint {
    double offset = 0.0;
    double cost = 0.0;
};

// Lowest boundary point: the client's own zero-cost spot when it lies on the
// edge, otherwise the cheaper end of the cost line. Ties go to the smaller
// offset. Only live pieces are considered.
std::optional<CclPoint> lb_point(const CCL& ccl);

// The cost line's values at the ends of the edge, where it is defined. The
// higher of the two is a genuine candidate too: at an edge boundary there is
// no cheaper point to slide to, so a placement there can be forced to carry
// the boundary value of the client it serves.
std::vector<CclPoint> boundary_points(const CCL& ccl, double edge_length);

// Crossings of pieces with strictly opposite slope signs, from different
// clients, within both (closed) domains. Same-sign crossings are skipped.
std::vector<CclPoint> r3_intersections(const std::vector<const CCL*>& ccls_on_edge);
// Crossings between one new cost line and a set of existing ones.
std::vector<CclPoint> r3_intersections_with(const CCL& fresh,
                                            const std::vector<const CCL*>& others);

// Whether building a server at (edge, offset) brings the client's cost to at
// most `cost`: either the client is already that cheap, or its cost line on
// that edge dips to `cost` there. `ccl_on_edge` may be null when the client
// has no cost line on the edge.
bool covers(const RoadNetwork& net, double cost, int edge, double offset, int client,
            const CostTable& table, const CCL* ccl_on_edge);

// max(p.cost, highest original cost among `clients` not covered by p);
// an empty uncovered set contributes 0.
double zmax(const std::vector<int>& clients, const PSP& p, const CostTable& table,
            const std::function<const CCL*(int client, int edge)>& ccl_lookup,
            const RoadNetwork& net);

struct PruneResult {
    std::vector<int> kept;   // indices into the input
    std::vector<int> pruned; // retained by callers for later iterations
};

// Dominance pruning for one iteration. Equal covered sets keep the cheaper
// point (ties by smaller edge/offset); a point strictly below another whose
// coverage strictly contains its own is dropped when both cost less than the
// next client's cost.
PruneResult prune_dominated(const std::vector<PSP>& psps, double threshold);

// One virtual candidate per eligible edge at the given cost, covering the
// clients whose whole cost line on that edge stays strictly below it.
// `ccls` lists the live cost lines per edge for the clients seen so far.
std::vector<PSP> virtual_psps(const std::vector<int>& eligible_edges, double threshold,
                              const std::function<std::vector<const CCL*>(int edge)>& ccls,
                              std::size_t n_clients);

// Whether a cost line still matters at the current threshold: it does when it
// reaches above the threshold (ties count as active).
bool ccl_active(const CCL& ccl, double threshold);

// Strategy-4 test: an intersection of two inactive cost lines is dismissed;
// everything else is kept.
bool keep_intersection(const CCL& parent_a, const CCL& parent_b, double threshold);

} // namespace minmax
