#include "minmax/fixtures.hpp"

#include "minmax/errors.hpp"

namespace minmax {

Instance make_path3(int k) {
    auto net = std::make_shared<RoadNetwork>(3, std::vector<Edge>{{0, 1, 4.0}, {1, 2, 4.0}});
    Instance inst;
    inst.network = net;
    inst.clients = {{{1, 0.0}, 1.0}, {{1, 4.0}, 1.0}}; // v2 and v3
    inst.servers = {{0, 0.0}};                         // v1
    inst.eligible_edges = {0, 1};
    inst.k = k;
    inst.validate();
    return inst;
}

Instance make_fig3(double alpha, double beta, int k) {
    if (!(alpha > 0.0) || !(beta > 0.0)) throw invalid_input("alpha and beta must be positive");
    double d_s1_c1 = alpha * alpha + alpha + beta;
    double d_c1_c2 = alpha + 1.0;
    double d_c2_s2 = alpha + 1.0;
    if (!(d_s1_c1 < d_c1_c2 + d_c2_s2))
        throw invalid_input("alpha too large: c1 would prefer the far server");

    auto net = std::make_shared<RoadNetwork>(
        4, std::vector<Edge>{{0, 1, d_s1_c1}, {1, 2, d_c1_c2}, {2, 3, d_c2_s2}});
    Instance inst;
    inst.network = net;
    inst.clients = {{{1, 0.0}, 1.0}, {{2, 0.0}, alpha}}; // c1 at v2, c2 at v3
    inst.servers = {{0, 0.0}, {2, d_c2_s2}};             // s1 at v1, s2 at v4
    inst.eligible_edges = {0, 1, 2};
    inst.k = k;
    inst.validate();
    return inst;
}

} // namespace minmax
