#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "minmax/util.hpp"

namespace minmax {

struct Edge {
    int a = -1;
    int b = -1;
    double length = 0.0;
};

// Undirected road network. Immutable after construction and safe to share
// across threads; all search operations allocate their own working state.
class RoadNetwork {
public:
    RoadNetwork() = default;
    RoadNetwork(int vertex_count, std::vector<Edge> edges);

    int vertex_count() const { return vertex_count_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const Edge& edge(int id) const { return edges_[static_cast<std::size_t>(id)]; }
    const std::vector<Edge>& edges() const { return edges_; }
    std::span<const int> incident(int v) const;
    double total_length() const { return total_length_; }
    bool valid_edge(int id) const { return id >= 0 && id < edge_count(); }

private:
    int vertex_count_ = 0;
    std::vector<Edge> edges_;
    double total_length_ = 0.0;
    // CSR adjacency: incident edge ids of vertex v are
    // adj_edges_[adj_start_[v] .. adj_start_[v+1]).
    std::vector<int> adj_start_;
    std::vector<int> adj_edges_;
};

// A point on an edge, parameterized by distance from endpoint `a`.
// Offsets 0 and length(edge) denote the endpoints themselves.
struct EdgePoint {
    int edge = -1;
    double offset = 0.0;
};

// Vertex id when p sits at an endpoint (within tolerance), else nullopt.
std::optional<int> point_at_vertex(const RoadNetwork& net, const EdgePoint& p);

// Canonical equality: same spot on the same edge, or the same vertex reached
// through different edges.
bool same_point(const RoadNetwork& net, const EdgePoint& p, const EdgePoint& q);

void validate_point(const RoadNetwork& net, const EdgePoint& p);

// Single-source vertex distances, truncated at `radius` (kInf = unbounded).
// Vertices beyond the radius are reported as kInf.
struct DistanceMap {
    EdgePoint source;
    double radius = kInf;
    std::vector<double> vertex_dist; // kInf where unreached / beyond radius

    double at(int v) const { return vertex_dist[static_cast<std::size_t>(v)]; }
};

DistanceMap truncated_dijkstra(const RoadNetwork& net, const EdgePoint& source, double radius);

// Distance from the map's source to an arbitrary point, going through the
// target edge's endpoints or, when both lie on the same edge, directly along it.
double distance_to_point(const RoadNetwork& net, const DistanceMap& from, const EdgePoint& q);

// Exact shortest-path distance between two points; +inf when disconnected.
double point_distance(const RoadNetwork& net, const EdgePoint& p, const EdgePoint& q);

// Nearest source per vertex: (distance, source index), ties broken by the
// smaller index. Unreachable vertices get (kInf, -1).
std::vector<std::pair<double, int>> multi_source_nearest(const RoadNetwork& net,
                                                         std::span<const EdgePoint> sources);

// DIMACS shortest-path format: "p sp <n> <m>" header, "a <u> <v> <w>" arcs,
// "c" comments. A pair of opposite arcs with equal weight collapses to one
// undirected edge; leftover arcs become edges on their own. Self-loops and
// nonpositive weights are rejected.
RoadNetwork load_dimacs(const std::string& text);
RoadNetwork load_dimacs_file(const std::string& path);

} // namespace minmax
