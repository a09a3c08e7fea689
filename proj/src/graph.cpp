#include "minmax/graph.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <queue>
#include <sstream>

#include "minmax/errors.hpp"

namespace minmax {

RoadNetwork::RoadNetwork(int vertex_count, std::vector<Edge> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)) {
    if (vertex_count_ < 0) throw invalid_input("negative vertex count");
    std::vector<int> degree(static_cast<std::size_t>(vertex_count_), 0);
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        const Edge& e = edges_[i];
        if (e.a < 0 || e.a >= vertex_count_ || e.b < 0 || e.b >= vertex_count_)
            throw invalid_input("edge " + std::to_string(i) + " has endpoint out of range");
        if (e.a == e.b)
            throw invalid_input("edge " + std::to_string(i) + " is a self-loop");
        if (!(e.length > 0.0))
            throw invalid_input("edge " + std::to_string(i) + " has nonpositive length");
        ++degree[static_cast<std::size_t>(e.a)];
        ++degree[static_cast<std::size_t>(e.b)];
        total_length_ += e.length;
    }
    adj_start_.assign(static_cast<std::size_t>(vertex_count_) + 1, 0);
    for (int v = 0; v < vertex_count_; ++v)
        adj_start_[static_cast<std::size_t>(v) + 1] =
            adj_start_[static_cast<std::size_t>(v)] + degree[static_cast<std::size_t>(v)];
    adj_edges_.resize(edges_.size() * 2);
    std::vector<int> fill(adj_start_.begin(), adj_start_.end() - 1);
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        adj_edges_[static_cast<std::size_t>(fill[static_cast<std::size_t>(edges_[i].a)]++)] = static_cast<int>(i);
        adj_edges_[static_cast<std::size_t>(fill[static_cast<std::size_t>(edges_[i].b)]++)] = static_cast<int>(i);
    }
}

std::span<const int> RoadNetwork::incident(int v) const {
    auto lo = static_cast<std::size_t>(adj_start_[static_cast<std::size_t>(v)]);
    auto hi = static_cast<std::size_t>(adj_start_[static_cast<std::size_t>(v) + 1]);
    return {adj_edges_.data() + lo, hi - lo};
}

std::optional<int> point_at_vertex(const RoadNetwork& net, const EdgePoint& p) {
    const Edge& e = net.edge(p.edge);
    if (p.offset <= kEps) return e.a;
    if (p.offset >= e.length - kEps) return e.b;
    return std::nullopt;
}

bool same_point(const RoadNetwork& net, const EdgePoint& p, const EdgePoint& q) {
    if (p.edge == q.edge && approx_eq(p.offset, q.offset)) return true;
    auto pv = point_at_vertex(net, p);
    auto qv = point_at_vertex(net, q);
    return pv && qv && *pv == *qv;
}

void validate_point(const RoadNetwork& net, const EdgePoint& p) {
    if (!net.valid_edge(p.edge))
        throw invalid_input("edge id " + std::to_string(p.edge) + " out of range");
    const Edge& e = net.edge(p.edge);
    if (p.offset < -kEps || p.offset > e.length + kEps)
        throw invalid_input("offset " + std::to_string(p.offset) + " outside edge of length " +
                            std::to_string(e.length));
}

namespace {

struct HeapEntry {
    double dist;
    int source;
    int vertex;
    bool operator>(const HeapEntry& o) const {
        if (dist != o.dist) return dist > o.dist;
        return source > o.source;
    }
};

} // namespace

DistanceMap truncated_dijkstra(const RoadNetwork& net, const EdgePoint& source, double radius) {
    validate_point(net, source);
    if (radius < 0.0) throw invalid_input("negative search radius");

    DistanceMap out;
    out.source = source;
    out.radius = radius;
    out.vertex_dist.assign(static_cast<std::size_t>(net.vertex_count()), kInf);

    std::priority_queue<HeapEntry, std::vector<HeapEntry>, std::greater<>> heap;
    auto push = [&](int v, double d) {
        if (d <= radius + kEps && d < out.vertex_dist[static_cast<std::size_t>(v)]) {
            out.vertex_dist[static_cast<std::size_t>(v)] = d;
            heap.push({d, 0, v});
        }
    };
    const Edge& se = net.edge(source.edge);
    push(se.a, source.offset);
    push(se.b, se.length - source.offset);

    while (!heap.empty()) {
        auto [d, _, v] = heap.top();
        heap.pop();
        if (d > out.vertex_dist[static_cast<std::size_t>(v)]) continue;
        for (int eid : net.incident(v)) {
            const Edge& e = net.edge(eid);
            push(e.a == v ? e.b : e.a, d + e.length);
        }
    }
    return out;
}

double distance_to_point(const RoadNetwork& net, const DistanceMap& from, const EdgePoint& q) {
    const Edge& eq = net.edge(q.edge);
    double best = kInf;
    if (from.source.edge == q.edge)
        best = std::abs(from.source.offset - q.offset);
    best = std::min(best, from.at(eq.a) + q.offset);
    best = std::min(best, from.at(eq.b) + (eq.length - q.offset));
    return best;
}

double point_distance(const RoadNetwork& net, const EdgePoint& p, const EdgePoint& q) {
    validate_point(net, p);
    validate_point(net, q);
    DistanceMap dm = truncated_dijkstra(net, p, kInf);
    return distance_to_point(net, dm, q);
}

std::vector<std::pair<double, int>> multi_source_nearest(const RoadNetwork& net,
                                                         std::span<const EdgePoint> sources) {
    if (sources.empty()) throw invalid_input("multi_source_nearest: no sources");
    std::vector<std::pair<double, int>> best(static_cast<std::size_t>(net.vertex_count()),
                                             {kInf, -1});
    std::priority_queue<HeapEntry, std::vector<HeapEntry>, std::greater<>> heap;
    auto push = [&](int v, double d, int src) {
        auto& cur = best[static_cast<std::size_t>(v)];
        if (d < cur.first - kEps) {
            cur = {d, src};
            heap.push({d, src, v});
        } else if (d <= cur.first + kEps && src < cur.second) {
            cur = {std::min(cur.first, d), src};
            heap.push({cur.first, src, v});
        }
    };
    for (std::size_t i = 0; i < sources.size(); ++i) {
        validate_point(net, sources[i]);
        const Edge& e = net.edge(sources[i].edge);
        push(e.a, sources[i].offset, static_cast<int>(i));
        push(e.b, e.length - sources[i].offset, static_cast<int>(i));
    }
    while (!heap.empty()) {
        auto [d, src, v] = heap.top();
        heap.pop();
        auto cur = best[static_cast<std::size_t>(v)];
        if (d > cur.first + kEps || src != cur.second) continue;
        for (int eid : net.incident(v)) {
            const Edge& e = net.edge(eid);
            push(e.a == v ? e.b : e.a, cur.first + e.length, src);
        }
    }
    return best;
}

namespace {

struct ArcKey {
    int u, v;
    double w;
    bool operator<(const ArcKey& o) const {
        if (u != o.u) return u < o.u;
        if (v != o.v) return v < o.v;
        return w < o.w;
    }
};

} // namespace

RoadNetwork load_dimacs(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    int n = -1;
    long long m = -1;
    // First occurrence index keeps edge ids in input order; unpaired counts
    // track how many listed arcs are still waiting for their reverse twin.
    std::map<ArcKey, int> open_arcs;
    std::vector<Edge> edges;

    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue; // blank line
        if (tag == "c") continue;
        if (tag == "p") {
            if (n >= 0) throw parse_error("duplicate problem line", lineno);
            std::string kind;
            if (!(ls >> kind >> n >> m) || kind != "sp" || n < 0 || m < 0)
                throw parse_error("malformed header, expected 'p sp <n> <m>'", lineno);
            continue;
        }
        if (tag == "a") {
            if (n < 0) throw parse_error("arc before problem line", lineno);
            long long u, v;
            double w;
            if (!(ls >> u >> v >> w))
                throw parse_error("malformed arc, expected 'a <u> <v> <w>'", lineno);
            if (u < 1 || u > n || v < 1 || v > n)
                throw parse_error("vertex id out of range", lineno);
            if (u == v) throw parse_error("self-loop rejected", lineno);
            if (!(w > 0.0) || !std::isfinite(w))
                throw parse_error("nonpositive length", lineno);
            ArcKey key{static_cast<int>(std::min(u, v)), static_cast<int>(std::max(u, v)), w};
            auto it = open_arcs.find(key);
            if (it != open_arcs.end() && it->second > 0) {
                --it->second; // reverse of an already-seen arc
            } else {
                open_arcs[key] += 1;
                edges.push_back({key.u - 1, key.v - 1, w});
            }
            continue;
        }
        throw parse_error("unknown line type '" + tag + "'", lineno);
    }
    if (n < 0) throw parse_error("missing 'p sp' header");
    return RoadNetwork(n, std::move(edges));
}

RoadNetwork load_dimacs_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw invalid_input("cannot open graph file: " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return load_dimacs(ss.str());
}

} // namespace minmax
