#include <doctest.h>

#include "helpers.hpp"
#include "minmax/errors.hpp"
#include "minmax/fixtures.hpp"
#include "minmax/oracle.hpp"
#include "minmax/psp.hpp"
#include "minmax/solvers.hpp"

using namespace minmax;

namespace {

bool candidates_include(const Instance& inst, const CandidateSet& set, EdgePoint p) {
    for (const EdgePoint& q : set.points)
        if (same_point(inst.net(), p, q)) return true;
    return false;
}

} // namespace

TEST_CASE("candidate positions on the path fixture") {
    Instance inst = make_path3();
    CandidateSet set = oracle_candidates(inst);
    CHECK(candidates_include(inst, set, {1, 2.0})); // the crossing
    CHECK(candidates_include(inst, set, {1, 0.0})); // c1's position
    CHECK(candidates_include(inst, set, {1, 4.0})); // c2's position
}

TEST_CASE("one client, one reachable edge: only its boundary point") {
    auto net = std::make_shared<RoadNetwork>(2, std::vector<Edge>{{0, 1, 6.0}});
    Instance inst;
    inst.network = net;
    inst.clients = {{{0, 1.0}, 1.0}};
    inst.servers = {{0, 3.0}};
    inst.eligible_edges = {0};
    CandidateSet set = oracle_candidates(inst);
    REQUIRE(set.points.size() == 1);
    CHECK(same_point(inst.net(), set.points[0], {0, 1.0}));
}

TEST_CASE("no reachable eligible edge: empty candidate set") {
    // Radius 0.5 around the client never reaches the far edge.
    auto net = std::make_shared<RoadNetwork>(
        3, std::vector<Edge>{{0, 1, 2.0}, {1, 2, 50.0}});
    Instance inst;
    inst.network = net;
    inst.clients = {{{0, 0.5}, 1.0}};
    inst.servers = {{0, 0.0}};
    inst.eligible_edges = {1};
    CandidateSet set = oracle_candidates(inst);
    CHECK(set.points.empty());
    Solution s = solve_bruteforce(inst);
    CHECK(s.cmax == doctest::Approx(0.5)); // nothing to do: the original max
    CHECK(s.placements.empty());
}

TEST_CASE("brute force on the fixtures") {
    CHECK(solve_bruteforce(make_path3(1)).cmax == doctest::Approx(2.0));
    CHECK(solve_bruteforce(make_path3(2)).cmax == doctest::Approx(0.0));
    CHECK(solve_bruteforce(make_fig3(1.5, 0.25, 1)).cmax == doctest::Approx(1.5));
}

TEST_CASE("oracle guards") {
    Instance inst = make_path3(1);
    CHECK_THROWS_AS(oracle_candidates(inst, 1), guard_error);
    CHECK_THROWS_AS(solve_bruteforce(inst, 5000, 1.0), guard_error);
}

TEST_CASE("same-slope crossings are candidates for the oracle but not for R3") {
    // Both clients are reached through v2, so both cost lines fall toward v2
    // with different weights: they cross once with equal slope signs. The
    // wider oracle set keeps that point; the solver-side rule skips it.
    auto net = std::make_shared<RoadNetwork>(3, std::vector<Edge>{{0, 1, 10.0}, {1, 2, 2.0}});
    Instance inst;
    inst.network = net;
    inst.clients = {{{0, 10.0}, 1.0}, {{0, 9.0}, 3.0}}; // at v2 and 1 inside edge 0
    inst.servers = {{1, 2.0}};                          // at v3
    inst.eligible_edges = {0, 1};
    CostTable t = compute_cost_table(inst);
    REQUIRE(t.entries[0].dist == doctest::Approx(2.0));
    REQUIRE(t.entries[1].dist == doctest::Approx(3.0));
    // On edge 0: f0(t) = 10 - t on [8,10]; f1(t) = 3|t - 9| capped, falling
    // on [6,9]. Within [8,9] both fall; they cross at t = 8.5, cost 1.5.
    CandidateSet set = oracle_candidates(inst);
    CHECK(candidates_include(inst, set, {0, 8.5}));

    CCL a = build_ccl(inst, t, 0, 0);
    CCL b = build_ccl(inst, t, 1, 0);
    for (const CclPoint& pt : r3_intersections({&a, &b}))
        CHECK(pt.offset != doctest::Approx(8.5)); // same-sign crossing skipped
}

TEST_CASE("oracle equals the exact solver on the shared corpus slice") {
    auto corpus = testing::make_corpus({30});
    for (const Instance& inst : corpus) {
        double oracle = solve_bruteforce(inst).cmax;
        double exact = solve_exact(inst).solution.cmax;
        CHECK(exact == doctest::Approx(oracle).epsilon(1e-9));
    }
}
