#pragma once

#include <memory>
#include <string>
#include <vector>

#include "minmax/graph.hpp"

namespace minmax {

struct Client {
    EdgePoint position;
    double weight = 1.0; // > 0
};

// A placement problem: weighted clients, existing servers, the edges where
// new servers may be built, and the number of new servers to place.
// Immutable after construction; shared by all solvers.
struct Instance {
    std::shared_ptr<const RoadNetwork> network;
    std::vector<Client> clients;
    std::vector<EdgePoint> servers;
    std::vector<int> eligible_edges; // sorted, unique
    int k = 1;

    const RoadNetwork& net() const { return *network; }
    bool eligible(int edge) const;
    void validate() const;
};

// Per-client nearest existing server, plus the processing order used by the
// solvers: non-increasing cost, ties by client index.
struct CostTable {
    struct Entry {
        int nn_server = -1;
        double dist = 0.0;
        double cost = 0.0; // weight * dist
    };
    std::vector<Entry> entries; // by client index
    std::vector<int> order;     // client indices, highest cost first

    double max_cost() const { return entries.empty() ? 0.0 : entries[static_cast<std::size_t>(order.front())].cost; }
};

CostTable compute_cost_table(const Instance& inst);

struct Solution {
    std::vector<EdgePoint> placements;
    double cmax = 0.0;
    std::vector<double> per_client_cost; // by client index
};

// Ground-truth evaluator: per-client cost under servers plus placements,
// computed from shortest paths alone. `enforce_eligible` rejects placements
// off the eligible edge set.
Solution evaluate_cmax(const Instance& inst, std::vector<EdgePoint> placements,
                       bool enforce_eligible = true);

struct GenParams {
    int n_clients = 1;
    int n_servers = 1;
    double eligible_fraction = 0.1;
    double zipf_alpha = kInf; // kInf = unit weights
    std::uint64_t seed = 0;
    int k = 1;
};

// Random instance: positions uniform over total edge length, weights from a
// Zipf law over ranks 1..1000 (P(r) proportional to r^-alpha), eligible edges
// a uniform subset of ceil(fraction * |E|) edges. Deterministic under seed.
Instance generate_instance(std::shared_ptr<const RoadNetwork> net, const GenParams& params);

// gain = Max - kMax, gain ratio = gain / Max (0 when Max = 0).
std::pair<double, double> metrics(double max_cost, double k_max);

std::string instance_to_json(const Instance& inst);
Instance instance_from_json(std::shared_ptr<const RoadNetwork> net, const std::string& text);
Instance load_instance_file(std::shared_ptr<const RoadNetwork> net, const std::string& path);
void save_instance_file(const Instance& inst, const std::string& path);

} // namespace minmax
