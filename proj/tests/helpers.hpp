#pragma once

#include <algorithm>
#include <memory>
#include <random>
#include <vector>

#include "minmax/instance.hpp"

namespace minmax::testing {

// Independent distance oracle: splice both query points into the graph as
// real vertices and run Floyd-Warshall. Shares no code with the Dijkstra
// implementations under test.
inline double fw_point_distance(const RoadNetwork& net, const EdgePoint& p, const EdgePoint& q) {
    struct Seg {
        int u, v;
        double w;
    };
    std::vector<Seg> segs;
    int n = net.vertex_count();
    int pid = n, qid = n + 1;

    for (int e = 0; e < net.edge_count(); ++e) {
        const Edge& edge = net.edge(e);
        std::vector<std::pair<double, int>> cuts; // (offset, vertex id)
        cuts.push_back({0.0, edge.a});
        if (p.edge == e) cuts.push_back({p.offset, pid});
        if (q.edge == e) cuts.push_back({q.offset, qid});
        cuts.push_back({edge.length, edge.b});
        std::stable_sort(cuts.begin(), cuts.end(),
                         [](const auto& x, const auto& y) { return x.first < y.first; });
        for (std::size_t i = 0; i + 1 < cuts.size(); ++i)
            segs.push_back({cuts[i].second, cuts[i + 1].second, cuts[i + 1].first - cuts[i].first});
    }

    int total = n + 2;
    std::vector<std::vector<double>> d(static_cast<std::size_t>(total),
                                       std::vector<double>(static_cast<std::size_t>(total), kInf));
    for (int i = 0; i < total; ++i) d[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 0.0;
    for (const Seg& s : segs) {
        auto& duv = d[static_cast<std::size_t>(s.u)][static_cast<std::size_t>(s.v)];
        auto& dvu = d[static_cast<std::size_t>(s.v)][static_cast<std::size_t>(s.u)];
        duv = std::min(duv, s.w);
        dvu = std::min(dvu, s.w);
    }
    for (int m = 0; m < total; ++m)
        for (int i = 0; i < total; ++i)
            for (int j = 0; j < total; ++j)
                d[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = std::min(
                    d[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)],
                    d[static_cast<std::size_t>(i)][static_cast<std::size_t>(m)] +
                        d[static_cast<std::size_t>(m)][static_cast<std::size_t>(j)]);
    return d[static_cast<std::size_t>(pid)][static_cast<std::size_t>(qid)];
}

// Random connected multigraph: a spanning tree plus extra edges, half the
// graphs with integer lengths (tie-heavy) and half with fractional ones.
inline std::shared_ptr<RoadNetwork> random_network(std::mt19937_64& rng, int max_vertices = 30,
                                                   int max_edges = 60) {
    int n = 4 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_vertices - 3));
    bool integer_lengths = (rng() % 2) == 0;
    auto length = [&]() {
        if (integer_lengths) return static_cast<double>(1 + rng() % 9);
        return 0.5 + static_cast<double>(rng() % 1000) / 100.0;
    };
    std::vector<Edge> edges;
    for (int v = 1; v < n; ++v)
        edges.push_back({static_cast<int>(rng() % static_cast<std::uint64_t>(v)), v, length()});
    int extras = static_cast<int>(rng() % 8);
    while (extras-- > 0 && static_cast<int>(edges.size()) < max_edges) {
        int a = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
        int b = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
        if (a == b) continue;
        edges.push_back({a, b, length()});
    }
    return std::make_shared<RoadNetwork>(n, std::move(edges));
}

struct CorpusSpec {
    int count = 200;
    int max_vertices = 30;
    int max_clients = 8;
    int max_servers = 3;
};

// The seeded instance corpus shared by the unit suites and the acceptance
// suite: k in {1,2,3}, unit and Zipf-2 weights, eligible fractions 0.5 and 1.
inline std::vector<Instance> make_corpus(const CorpusSpec& spec = {}) {
    std::vector<Instance> out;
    std::uint64_t seed = 1;
    while (static_cast<int>(out.size()) < spec.count) {
        std::mt19937_64 rng(seed * 7919);
        auto net = random_network(rng, spec.max_vertices);
        GenParams params;
        params.n_clients = 2 + static_cast<int>(rng() % static_cast<std::uint64_t>(spec.max_clients - 1));
        params.n_servers = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(spec.max_servers));
        params.eligible_fraction = (seed % 2 == 0) ? 0.5 : 1.0;
        params.zipf_alpha = (seed % 4 < 2) ? kInf : 2.0;
        params.seed = seed;
        params.k = 1 + static_cast<int>(seed % 3);
        out.push_back(generate_instance(net, params));
        ++seed;
    }
    return out;
}

} // namespace minmax::testing
