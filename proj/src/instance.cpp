#include "minmax/instance.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <random>
#include <sstream>

#include <json.hpp>

#include "minmax/errors.hpp"

namespace minmax {

bool Instance::eligible(int edge) const {
    return std::binary_search(eligible_edges.begin(), eligible_edges.end(), edge);
}

void Instance::validate() const {
    if (!network) throw invalid_input("instance has no network");
    if (servers.empty()) throw invalid_input("instance needs at least one server");
    if (k < 1) throw invalid_input("k must be >= 1");
    for (const Client& c : clients) {
        validate_point(net(), c.position);
        if (!(c.weight > 0.0)) throw invalid_input("client weight must be positive");
    }
    for (const EdgePoint& s : servers) validate_point(net(), s);
    for (int e : eligible_edges)
        if (!net().valid_edge(e))
            throw invalid_input("eligible edge id " + std::to_string(e) + " out of range");
    if (!std::is_sorted(eligible_edges.begin(), eligible_edges.end()))
        throw invalid_input("eligible edge list must be sorted");
}

CostTable compute_cost_table(const Instance& inst) {
    inst.validate();
    const RoadNetwork& net = inst.net();
    auto nearest = multi_source_nearest(net, inst.servers);

    CostTable table;
    table.entries.resize(inst.clients.size());

    // Servers grouped by edge, for the direct along-edge route.
    std::vector<std::pair<int, int>> servers_by_edge; // (edge, server idx)
    for (std::size_t i = 0; i < inst.servers.size(); ++i)
        servers_by_edge.emplace_back(inst.servers[i].edge, static_cast<int>(i));
    std::sort(servers_by_edge.begin(), servers_by_edge.end());

    for (std::size_t ci = 0; ci < inst.clients.size(); ++ci) {
        const Client& c = inst.clients[ci];
        const Edge& e = net.edge(c.position.edge);

        double best = kInf;
        int best_idx = -1;
        auto offer = [&](double d, int idx) {
            if (idx < 0 || d == kInf) return;
            if (best_idx < 0 || d < best - kEps) {
                best = d;
                best_idx = idx;
            } else if (d <= best + kEps && idx < best_idx) {
                best = std::min(best, d);
                best_idx = idx;
            }
        };
        offer(nearest[static_cast<std::size_t>(e.a)].first + c.position.offset,
              nearest[static_cast<std::size_t>(e.a)].second);
        offer(nearest[static_cast<std::size_t>(e.b)].first + (e.length - c.position.offset),
              nearest[static_cast<std::size_t>(e.b)].second);
        auto lo = std::lower_bound(servers_by_edge.begin(), servers_by_edge.end(),
                                   std::make_pair(c.position.edge, -1));
        for (auto it = lo; it != servers_by_edge.end() && it->first == c.position.edge; ++it)
            offer(std::abs(inst.servers[static_cast<std::size_t>(it->second)].offset - c.position.offset),
                  it->second);

        if (best_idx < 0)
            throw invalid_input("client " + std::to_string(ci) + " unreachable from all servers");
        table.entries[ci] = {best_idx, best, c.weight * best};
    }

    table.order.resize(inst.clients.size());
    std::iota(table.order.begin(), table.order.end(), 0);
    std::stable_sort(table.order.begin(), table.order.end(), [&](int x, int y) {
        return table.entries[static_cast<std::size_t>(x)].cost >
               table.entries[static_cast<std::size_t>(y)].cost;
    });
    return table;
}

Solution evaluate_cmax(const Instance& inst, std::vector<EdgePoint> placements,
                       bool enforce_eligible) {
    const RoadNetwork& net = inst.net();
    for (const EdgePoint& p : placements) {
        validate_point(net, p);
        if (enforce_eligible && !inst.eligible(p.edge))
            throw invalid_input("placement on edge " + std::to_string(p.edge) +
                                " which is not eligible");
    }
    // Coincident placements are no-ops; keep one representative.
    std::vector<EdgePoint> distinct;
    for (const EdgePoint& p : placements) {
        bool dup = false;
        for (const EdgePoint& q : distinct)
            if (same_point(net, p, q)) { dup = true; break; }
        if (!dup) distinct.push_back(p);
    }

    CostTable base = compute_cost_table(inst);
    Solution sol;
    sol.placements = std::move(distinct);
    sol.per_client_cost.resize(inst.clients.size());

    std::vector<DistanceMap> maps;
    maps.reserve(sol.placements.size());
    for (const EdgePoint& p : sol.placements)
        maps.push_back(truncated_dijkstra(net, p, kInf));

    double cmax = 0.0;
    for (std::size_t ci = 0; ci < inst.clients.size(); ++ci) {
        double d = base.entries[ci].dist;
        for (const DistanceMap& m : maps)
            d = std::min(d, distance_to_point(net, m, inst.clients[ci].position));
        double cost = inst.clients[ci].weight * d;
        sol.per_client_cost[ci] = cost;
        cmax = std::max(cmax, cost);
    }
    sol.cmax = cmax;
    return sol;
}

namespace {

// CDF over ranks 1..n with P(r) proportional to r^-alpha.
std::vector<double> zipf_cdf(double alpha, int n) {
    std::vector<double> cdf(static_cast<std::size_t>(n));
    double sum = 0.0;
    for (int r = 1; r <= n; ++r) {
        sum += std::pow(static_cast<double>(r), -alpha);
        cdf[static_cast<std::size_t>(r - 1)] = sum;
    }
    for (double& x : cdf) x /= sum;
    return cdf;
}

} // namespace

Instance generate_instance(std::shared_ptr<const RoadNetwork> net, const GenParams& params) {
    if (!net || net->edge_count() == 0) throw invalid_input("empty graph");
    if (params.n_clients < 1 || params.n_servers < 1)
        throw invalid_input("need at least one client and one server");
    if (!(params.eligible_fraction > 0.0) || params.eligible_fraction > 1.0)
        throw invalid_input("eligible fraction must be in (0, 1]");
    if (params.k < 1) throw invalid_input("k must be >= 1");

    std::mt19937_64 rng(params.seed);
    const RoadNetwork& g = *net;

    std::vector<double> prefix(static_cast<std::size_t>(g.edge_count()) + 1, 0.0);
    for (int e = 0; e < g.edge_count(); ++e)
        prefix[static_cast<std::size_t>(e) + 1] =
            prefix[static_cast<std::size_t>(e)] + g.edge(e).length;

    auto sample_point = [&]() {
        double x = canonical_u01(rng) * prefix.back();
        auto it = std::upper_bound(prefix.begin(), prefix.end(), x);
        int e = static_cast<int>(std::min<std::ptrdiff_t>(it - prefix.begin() - 1,
                                                          g.edge_count() - 1));
        double off = std::min(x - prefix[static_cast<std::size_t>(e)], g.edge(e).length);
        return EdgePoint{e, off};
    };

    constexpr int kZipfRanks = 1000;
    std::vector<double> cdf;
    if (params.zipf_alpha != kInf) cdf = zipf_cdf(params.zipf_alpha, kZipfRanks);
    auto sample_weight = [&]() {
        if (params.zipf_alpha == kInf) return 1.0;
        double u = canonical_u01(rng);
        auto it = std::lower_bound(cdf.begin(), cdf.end(), u);
        return static_cast<double>((it - cdf.begin()) + 1);
    };

    Instance inst;
    inst.network = std::move(net);
    inst.k = params.k;
    for (int i = 0; i < params.n_clients; ++i) {
        EdgePoint pos = sample_point();
        inst.clients.push_back({pos, sample_weight()});
    }
    for (int i = 0; i < params.n_servers; ++i) inst.servers.push_back(sample_point());

    int m = static_cast<int>(std::ceil(params.eligible_fraction * g.edge_count()));
    m = std::clamp(m, 1, g.edge_count());
    std::vector<int> ids(static_cast<std::size_t>(g.edge_count()));
    std::iota(ids.begin(), ids.end(), 0);
    for (int i = 0; i < m; ++i) {
        auto j = i + static_cast<int>(rng() % static_cast<std::uint64_t>(ids.size() - static_cast<std::size_t>(i)));
        std::swap(ids[static_cast<std::size_t>(i)], ids[static_cast<std::size_t>(j)]);
    }
    inst.eligible_edges.assign(ids.begin(), ids.begin() + m);
    std::sort(inst.eligible_edges.begin(), inst.eligible_edges.end());

    inst.validate();
    return inst;
}

std::pair<double, double> metrics(double max_cost, double k_max) {
    if (k_max < 0.0 || max_cost < 0.0) throw invalid_input("metrics: negative cost");
    if (k_max > max_cost + kEps)
        throw invalid_input("metrics: kMax exceeds Max; a solver must never worsen cmax");
    double gain = std::max(0.0, max_cost - k_max);
    double ratio = max_cost > 0.0 ? gain / max_cost : 0.0;
    return {gain, ratio};
}

std::string instance_to_json(const Instance& inst) {
    nlohmann::json j;
    j["clients"] = nlohmann::json::array();
    for (const Client& c : inst.clients)
        j["clients"].push_back({{"edge", c.position.edge},
                                {"offset", c.position.offset},
                                {"weight", c.weight}});
    j["servers"] = nlohmann::json::array();
    for (const EdgePoint& s : inst.servers)
        j["servers"].push_back({{"edge", s.edge}, {"offset", s.offset}});
    j["eligible_edges"] = inst.eligible_edges;
    j["k"] = inst.k;
    return j.dump(2) + "\n";
}

Instance instance_from_json(std::shared_ptr<const RoadNetwork> net, const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw parse_error(std::string("instance JSON: ") + e.what());
    }
    Instance inst;
    inst.network = std::move(net);
    try {
        for (const auto& c : j.at("clients"))
            inst.clients.push_back({{c.at("edge").get<int>(), c.at("offset").get<double>()},
                                    c.at("weight").get<double>()});
        for (const auto& s : j.at("servers"))
            inst.servers.push_back({s.at("edge").get<int>(), s.at("offset").get<double>()});
        inst.eligible_edges = j.at("eligible_edges").get<std::vector<int>>();
        inst.k = j.at("k").get<int>();
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("instance JSON: ") + e.what());
    }
    std::sort(inst.eligible_edges.begin(), inst.eligible_edges.end());
    inst.eligible_edges.erase(std::unique(inst.eligible_edges.begin(), inst.eligible_edges.end()),
                              inst.eligible_edges.end());
    inst.validate();
    return inst;
}

Instance load_instance_file(std::shared_ptr<const RoadNetwork> net, const std::string& path) {
    std::ifstream f(path);
    if (!f) throw invalid_input("cannot open instance file: " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return instance_from_json(std::move(net), ss.str());
}

void save_instance_file(const Instance& inst, const std::string& path) {
    std::ofstream f(path);
    if (!f) throw invalid_input("cannot write instance file: " + path);
    f << instance_to_json(inst);
}

} // namespace minmax
