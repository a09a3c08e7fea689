#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "minmax/ccl.hpp"
#include "minmax/fixtures.hpp"
#include "minmax/psp.hpp"

using namespace minmax;

namespace {

Bitset bits(std::size_t n, std::initializer_list<int> idx) {
    Bitset b(n);
    for (int i : idx) b.set(static_cast<std::size_t>(i));
    return b;
}

PSP make_psp(int edge, double offset, double cost, Bitset covered) {
    PSP p;
    p.edge = edge;
    p.offset = offset;
    p.cost = cost;
    p.origin = PspOrigin::Intersection;
    p.covered = std::move(covered);
    return p;
}

} // namespace

TEST_CASE("lowest boundary points on the path fixture") {
    Instance inst = make_path3();
    CostTable t = compute_cost_table(inst);

    // c1 lies on [v2,v3]: its zero-cost spot is the boundary point.
    CCL c1 = build_ccl(inst, t, 0, 1);
    auto lb1 = lb_point(c1);
    REQUIRE(lb1.has_value());
    CHECK(lb1->offset == doctest::Approx(0.0));
    CHECK(lb1->cost == doctest::Approx(0.0));

    // c2 on [v1,v2]: f(u) = 8 - u, cheaper end at u = 4 with cost 4.
    CCL c2 = build_ccl(inst, t, 1, 0);
    auto lb2 = lb_point(c2);
    REQUIRE(lb2.has_value());
    CHECK(lb2->offset == doctest::Approx(4.0));
    CHECK(lb2->cost == doctest::Approx(4.0));
}

TEST_CASE("single-boundary case: a line seen only at one edge end") {
    // Client at v1 with radius exactly 3: edge [v2,v3] is touched at v2 only,
    // and that touch point is the lowest boundary point.
    auto net = std::make_shared<RoadNetwork>(3, std::vector<Edge>{{0, 1, 3.0}, {1, 2, 5.0}});
    Instance inst;
    inst.network = net;
    inst.clients = {{{0, 0.0}, 2.0}};  // at v1
    inst.servers = {{0, 3.0}};         // at v2: radius 3
    inst.eligible_edges = {0, 1};
    CostTable t = compute_cost_table(inst);
    REQUIRE(t.entries[0].dist == doctest::Approx(3.0));

    CCL touch = build_ccl(inst, t, 0, 1);
    REQUIRE(touch.pieces.size() == 1);
    CHECK(touch.pieces[0].degenerate());
    auto lb = lb_point(touch);
    REQUIRE(lb.has_value());
    CHECK(lb->offset == doctest::Approx(0.0));
    CHECK(lb->cost == doctest::Approx(6.0)); // weight 2, distance 3
}

TEST_CASE("boundary points report the line's value at each edge end") {
    Instance inst = make_path3();
    CostTable t = compute_cost_table(inst);

    CCL c2 = build_ccl(inst, t, 1, 0); // f(u) = 8 - u across the whole edge
    auto bps = boundary_points(c2, 4.0);
    REQUIRE(bps.size() == 2);
    CHECK(bps[0].offset == doctest::Approx(0.0));
    CHECK(bps[0].cost == doctest::Approx(8.0));
    CHECK(bps[1].offset == doctest::Approx(4.0));
    CHECK(bps[1].cost == doctest::Approx(4.0));

    // A line that ends inside the edge exposes only the end it reaches.
    Instance far = make_path3();
    far.servers = {{0, 1.0}};
    CostTable t2 = compute_cost_table(far);
    CCL c1 = build_ccl(far, t2, 0, 1); // domain [0,3] of a length-4 edge
    auto one = boundary_points(c1, 4.0);
    REQUIRE(one.size() == 1);
    CHECK(one[0].offset == doctest::Approx(0.0));
}

TEST_CASE("opposite-slope crossings on the path fixture") {
    Instance inst = make_path3();
    CostTable t = compute_cost_table(inst);
    CCL c1 = build_ccl(inst, t, 0, 1);
    CCL c2 = build_ccl(inst, t, 1, 1);

    auto pts = r3_intersections({&c1, &c2});
    REQUIRE(pts.size() == 1);
    CHECK(pts[0].offset == doctest::Approx(2.0));
    CHECK(pts[0].cost == doctest::Approx(2.0));

    // Parallel lines with the same slope direction never intersect.
    CCL c1_off = build_ccl(inst, t, 0, 0); // 4 - u
    CCL c2_off = build_ccl(inst, t, 1, 0); // 8 - u
    CHECK(r3_intersections({&c1_off, &c2_off}).empty());
}

TEST_CASE("crossings outside either domain are excluded") {
    // Opposite-slope lines on the long edge whose extensions would cross at
    // t = 5, far outside the reachable stretches [9,10] and [0,1].
    auto net = std::make_shared<RoadNetwork>(4, std::vector<Edge>{
        {0, 1, 10.0}, {1, 2, 1.0}, {0, 3, 1.0}});
    Instance inst;
    inst.network = net;
    inst.clients = {{{1, 1.0}, 1.0}, {{2, 1.0}, 1.0}}; // at v3 and v4
    inst.servers = {{0, 9.0}, {0, 1.0}};               // each 2 away from its client
    inst.eligible_edges = {0, 1, 2};
    CostTable t = compute_cost_table(inst);
    REQUIRE(t.entries[0].dist == doctest::Approx(2.0));
    REQUIRE(t.entries[1].dist == doctest::Approx(2.0));
    CCL a = build_ccl(inst, t, 0, 0); // f(t) = 11 - t on [9,10]
    CCL b = build_ccl(inst, t, 1, 0); // f(t) = 1 + t  on [0,1]
    REQUIRE(a.pieces.size() == 1);
    REQUIRE(b.pieces.size() == 1);
    CHECK_FALSE(a.pieces[0].degenerate());
    CHECK_FALSE(b.pieces[0].degenerate());
    CHECK(r3_intersections({&a, &b}).empty());
}

TEST_CASE("coverage semantics") {
    Instance inst = make_path3();
    CostTable t = compute_cost_table(inst);
    CCL c1 = build_ccl(inst, t, 0, 1);
    CCL c2 = build_ccl(inst, t, 1, 1);

    // The crossing point covers both clients.
    CHECK(covers(inst.net(), 2.0, 1, 2.0, 0, t, &c1));
    CHECK(covers(inst.net(), 2.0, 1, 2.0, 1, t, &c2));

    // A cheap bar covers neither.
    CHECK_FALSE(covers(inst.net(), 1.0, 1, 2.0, 0, t, &c1));
    CHECK_FALSE(covers(inst.net(), 1.0, 1, 2.0, 1, t, &c2));

    // Any point whose bar clears the client's current cost covers it, with or
    // without a line on that edge.
    CHECK(covers(inst.net(), 4.0, 0, 0.5, 0, t, nullptr));
    CHECK(covers(inst.net(), 8.5, 0, 0.5, 1, t, nullptr));
}

TEST_CASE("coverage is monotone in the bar") {
    std::mt19937_64 rng(71);
    for (int it = 0; it < 200; ++it) {
        auto net = testing::random_network(rng, 10);
        GenParams p;
        p.n_clients = 3;
        p.n_servers = 1;
        p.eligible_fraction = 1.0;
        p.seed = static_cast<std::uint64_t>(it);
        Instance inst = generate_instance(net, p);
        CostTable t = compute_cost_table(inst);
        int e = static_cast<int>(rng() % static_cast<std::uint64_t>(net->edge_count()));
        double off = net->edge(e).length * 0.37;
        double lambda = static_cast<double>(rng() % 10);
        for (std::size_t c = 0; c < inst.clients.size(); ++c) {
            CCL ccl = build_ccl(inst, t, static_cast<int>(c), e);
            const CCL* cp = ccl.empty() ? nullptr : &ccl;
            if (covers(inst.net(), lambda, e, off, static_cast<int>(c), t, cp))
                CHECK(covers(inst.net(), lambda + 1.0, e, off, static_cast<int>(c), t, cp));
        }
    }
}

TEST_CASE("zmax definition") {
    Instance inst = make_path3();
    CostTable t = compute_cost_table(inst);
    CCL c1 = build_ccl(inst, t, 0, 1);
    CCL c2 = build_ccl(inst, t, 1, 1);
    auto lookup = [&](int client, int edge) -> const CCL* {
        if (edge != 1) return nullptr;
        return client == 0 ? &c1 : &c2;
    };

    PSP crossing = make_psp(1, 2.0, 2.0, bits(2, {0, 1}));
    CHECK(zmax({0, 1}, crossing, t, lookup, inst.net()) == doctest::Approx(2.0));

    PSP lb_c1 = make_psp(1, 0.0, 0.0, bits(2, {0}));
    CHECK(zmax({0, 1}, lb_c1, t, lookup, inst.net()) == doctest::Approx(8.0));

    // Uncovered set empty contributes zero, not the bar of some client.
    PSP everything = make_psp(1, 2.0, 9.0, bits(2, {0, 1}));
    CHECK(zmax({0, 1}, everything, t, lookup, inst.net()) == doctest::Approx(9.0));
}

TEST_CASE("dominance pruning") {
    const std::size_t n = 2;

    SUBCASE("equal coverage keeps the cheaper point") {
        std::vector<PSP> ps{make_psp(0, 1.0, 2.0, bits(n, {0, 1})),
                            make_psp(0, 3.0, 3.0, bits(n, {0, 1}))};
        PruneResult r = prune_dominated(ps, 10.0);
        REQUIRE(r.kept.size() == 1);
        CHECK(r.kept[0] == 0);
        CHECK(r.pruned[0] == 1);
    }

    SUBCASE("subset coverage below the bar drops the poorer point") {
        std::vector<PSP> ps{make_psp(0, 1.0, 1.0, bits(n, {0})),
                            make_psp(0, 3.0, 2.0, bits(n, {0, 1}))};
        PruneResult r = prune_dominated(ps, 5.0);
        REQUIRE(r.kept.size() == 1);
        CHECK(r.kept[0] == 1);
        CHECK(r.pruned[0] == 0);
    }

    SUBCASE("guard: no pruning when the richer point reaches the bar") {
        std::vector<PSP> ps{make_psp(0, 1.0, 1.0, bits(n, {0})),
                            make_psp(0, 3.0, 2.0, bits(n, {0, 1}))};
        PruneResult r = prune_dominated(ps, 1.5);
        CHECK(r.kept.size() == 2);
        CHECK(r.pruned.empty());
    }

    SUBCASE("equal cost and coverage: smaller edge/offset wins") {
        std::vector<PSP> ps{make_psp(1, 5.0, 2.0, bits(n, {0})),
                            make_psp(0, 7.0, 2.0, bits(n, {0}))};
        PruneResult r = prune_dominated(ps, 10.0);
        REQUIRE(r.kept.size() == 1);
        CHECK(r.kept[0] == 1); // edge 0 beats edge 1
    }
}

TEST_CASE("virtual candidates per edge") {
    Instance inst = make_path3();
    CostTable t = compute_cost_table(inst);
    CCL c1 = build_ccl(inst, t, 0, 1);
    CCL c2 = build_ccl(inst, t, 1, 1);
    auto ccls = [&](int edge) -> std::vector<const CCL*> {
        if (edge == 1) return {&c1, &c2};
        return {};
    };

    // Both lines top out at exactly 4: not strictly below a bar of 4.
    auto at4 = virtual_psps({0, 1}, 4.0, ccls, 2);
    REQUIRE(at4.size() == 2);
    CHECK_FALSE(at4[0].covered.any()); // edge with no lines at all
    CHECK_FALSE(at4[1].covered.any());

    auto at5 = virtual_psps({0, 1}, 5.0, ccls, 2);
    CHECK(at5[1].covered.test(0));
    CHECK(at5[1].covered.test(1));
    CHECK(at5[1].cost == doctest::Approx(5.0));
}

TEST_CASE("inactive-intersection filter") {
    Instance inst = make_path3();
    CostTable t = compute_cost_table(inst);
    CCL c1 = build_ccl(inst, t, 0, 1); // max 4
    CCL c2 = build_ccl(inst, t, 1, 1); // max 4

    CHECK_FALSE(keep_intersection(c1, c2, 5.0)); // both tops below 5: dismissed
    CHECK(keep_intersection(c1, c2, 3.0));       // both active at a bar of 3
    CHECK(keep_intersection(c1, c2, 4.0));       // exact tie counts as active

    CHECK(ccl_active(c1, 3.0));
    CHECK_FALSE(ccl_active(c1, 4.5));
}

TEST_CASE("candidate count per edge stays within the quadratic bound") {
    std::mt19937_64 rng(83);
    for (int it = 0; it < 40; ++it) {
        auto net = testing::random_network(rng, 12);
        GenParams p;
        p.n_clients = 6;
        p.n_servers = 2;
        p.eligible_fraction = 1.0;
        p.seed = static_cast<std::uint64_t>(it);
        Instance inst = generate_instance(net, p);
        CostTable t = compute_cost_table(inst);
        for (int e = 0; e < net->edge_count(); ++e) {
            std::vector<CCL> ccls;
            for (std::size_t c = 0; c < inst.clients.size(); ++c) {
                CCL ccl = build_ccl(inst, t, static_cast<int>(c), e);
                if (!ccl.empty()) ccls.push_back(std::move(ccl));
            }
            std::vector<const CCL*> view;
            for (const CCL& c : ccls) view.push_back(&c);
            std::size_t count = r3_intersections(view).size();
            for (const CCL& c : ccls)
                if (lb_point(c)) ++count;
            std::size_t m = ccls.size();
            CHECK(count <= 4 * m * m + 2 * m);
        }
    }
}
